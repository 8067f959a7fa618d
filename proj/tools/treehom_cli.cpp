#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "treehom/canonical.hpp"
#include "treehom/checks.hpp"
#include "treehom/enumerate.hpp"
#include "treehom/homcount.hpp"
#include "treehom/markov.hpp"

namespace {

using namespace treehom;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path, bool one_based) {
    auto parsed = parse_any_file(slurp(path), one_based);
    if (std::holds_alternative<Graph>(parsed)) return std::get<Graph>(parsed);
    return std::get<Tree>(parsed).graph();
}

Tree load_tree(const std::string& path, bool one_based) {
    return parse_tree_file(slurp(path), one_based);
}

std::vector<Rat> load_chain_weights(const std::string& path, int n) {
    auto j = nlohmann::json::parse(slurp(path));
    if (!j.contains("weights") || !j["weights"].is_array())
        throw Error("chain file needs a 'weights' array");
    std::vector<Rat> w;
    for (const auto& item : j["weights"]) {
        Rat r;
        if (item.is_number_integer()) {
            r = Rat(item.get<long>());
        } else if (item.is_string()) {
            if (r.set_str(item.get<std::string>(), 10) != 0)
                throw Error("bad rational '" + item.get<std::string>() + "' in chain file");
            r.canonicalize();
        } else {
            throw Error("chain weights must be integers or 'p/q' strings");
        }
        w.push_back(r);
    }
    if (static_cast<int>(w.size()) != n)
        throw Error("chain file has " + std::to_string(w.size()) + " weights for " +
                    std::to_string(n) + " vertices");
    return w;
}

void print_report(const CheckReport& r, bool as_json) {
    if (as_json) {
        std::cout << r.to_json().dump(2) << "\n";
        return;
    }
    const char* status = r.status == CheckStatus::Pass  ? "pass"
                         : r.status == CheckStatus::Fail ? "FAIL"
                                                          : "skipped";
    std::cout << r.id << ": " << status << " (" << r.instances << " instances, " << r.seconds
              << "s)\n";
    for (const auto& v : r.violations) {
        std::cout << "violation:\n  source: " << v.source << "  target: " << v.target
                  << "  values:";
        for (const auto& x : v.values) std::cout << ' ' << x;
        std::cout << "\n";
    }
    for (const auto& w : r.witnesses) std::cout << "witness:\n" << w;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tree homomorphism counting and verification"};
    app.require_subcommand(1);
    app.fallthrough(); // lets --one-based appear after the subcommand too
    bool one_based = false;
    app.add_flag("--one-based", one_based, "treat vertex ids in input files as 1-based");

    auto* count = app.add_subcommand("count", "hom(T, G) for a tree file and a target file");
    std::string count_tree, count_graph;
    int count_root = -1;
    bool count_vector = false;
    count->add_option("--tree", count_tree, "source tree file")->required();
    count->add_option("--graph", count_graph, "target graph or tree file")->required();
    count->add_option("--root", count_root, "root vertex; prints the rooted count");
    count->add_flag("--vector", count_vector, "print the hom-vector as a JSON array");

    auto* endo = app.add_subcommand("endo", "|End(T)| = hom(T, T)");
    std::string endo_tree;
    endo->add_option("--tree", endo_tree, "tree file")->required();

    auto* cycle = app.add_subcommand("cycle", "hom(C_m, G): closed walks of length m");
    int cycle_m = 0;
    std::string cycle_graph;
    cycle->add_option("-m", cycle_m, "cycle length (>= 3)")->required();
    cycle->add_option("--graph", cycle_graph, "target graph or tree file")->required();

    auto* enumerate = app.add_subcommand("enumerate", "unlabeled trees on N vertices");
    int enum_n = 0;
    bool enum_list = false;
    enumerate->add_option("n", enum_n, "vertex count")->required();
    enumerate->add_flag("--list", enum_list, "print one tree per line (n, then edge pairs)");

    auto* poset = app.add_subcommand("poset", "KC Hasse diagram on N-vertex trees");
    int poset_n = 0;
    std::string poset_dot;
    poset->add_option("n", poset_n, "vertex count")->required();
    poset->add_option("--dot", poset_dot, "write DOT digraph to this file")->required();

    auto* bound = app.add_subcommand("bound", "lower bounds next to the exact count");
    bound->require_subcommand(1);
    std::string bound_tree, bound_graph, bound_chain;
    auto add_bound_common = [&](CLI::App* sub) {
        sub->add_option("--tree", bound_tree, "source tree file")->required();
        sub->add_option("--graph", bound_graph, "target file")->required();
    };
    auto* bound_spectral = bound->add_subcommand("spectral", "Perron-eigenvector bound");
    add_bound_common(bound_spectral);
    auto* bound_degree = bound->add_subcommand("degree", "degree-sequence bound");
    add_bound_common(bound_degree);
    auto* bound_markov = bound->add_subcommand("markov", "entropy bound for a weight file");
    add_bound_common(bound_markov);
    bound_markov->add_option("--chain", bound_chain, "JSON {\"weights\": [...]} file")
        ->required();

    auto* verify = app.add_subcommand("verify", "run one registry check");
    std::string verify_id;
    SweepSpec sweep;
    bool verify_json = false;
    verify->add_option("id", verify_id, "check id")->required();
    verify->add_option("--m-max", sweep.m_max, "largest source tree");
    verify->add_option("--n-max", sweep.n_max, "largest target tree");
    verify->add_flag("--json", verify_json, "print the JSON report");

    auto* repro = app.add_subcommand("repro", "reproduce a stored counterexample");
    std::string repro_id;
    bool repro_json = false;
    repro->add_option("id", repro_id, "counterexample id")->required();
    repro->add_flag("--json", repro_json, "print the JSON report");

    try {
        app.parse(argc, argv);

        if (*count) {
            Tree t = load_tree(count_tree, one_based);
            Graph g = load_graph(count_graph, one_based);
            if (count_vector || count_root >= 0) {
                int root = count_root >= 0 ? count_root : 0;
                HomVector h = hom_vector(t, root, g);
                if (count_vector) {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const Int& e : h.entries) arr.push_back(dec(e));
                    std::cout << arr.dump() << "\n";
                } else {
                    std::cout << dec(h.norm()) << "\n";
                }
            } else {
                std::cout << dec(hom_count(t, g)) << "\n";
            }
        } else if (*endo) {
            Tree t = load_tree(endo_tree, one_based);
            std::cout << dec(hom_count(t, t.graph())) << "\n";
        } else if (*cycle) {
            std::cout << dec(hom_cycle(cycle_m, load_graph(cycle_graph, one_based))) << "\n";
        } else if (*enumerate) {
            auto trees = enumerate_trees(enum_n);
            if (enum_list) {
                for (const Tree& t : trees) {
                    std::cout << t.vertex_count();
                    for (auto [u, v] : t.graph().edges()) std::cout << "  " << u << ' ' << v;
                    std::cout << "\n";
                }
            } else {
                std::cout << trees.size() << "\n";
            }
        } else if (*poset) {
            PosetDiagram p = build_kc_poset(poset_n);
            std::ofstream out(poset_dot);
            if (!out) throw Error("cannot write '" + poset_dot + "'");
            out << export_dot(p);
            std::cout << p.nodes.size() << " nodes, " << p.hasse_edges.size()
                      << " hasse edges\n";
        } else if (*bound) {
            Tree t = load_tree(bound_tree, one_based);
            Graph g = load_graph(bound_graph, one_based);
            Int exact = hom_count(t, g);
            std::cout.precision(12);
            if (*bound_spectral) {
                SpectralBound b = spectral_bound(t, g);
                std::cout << "lambda " << b.lambda << "\nspectral_entropy " << b.h_lambda
                          << "\nlower " << b.lower << "\npath_upper " << b.path_upper
                          << "\nhom " << dec(exact) << "\n";
            } else if (*bound_degree) {
                std::cout << "lower " << degree_bound(t, g) << "\nhom " << dec(exact) << "\n";
            } else {
                Tree target = parse_tree_file(slurp(bound_graph), one_based);
                auto w = load_chain_weights(bound_chain, target.vertex_count());
                MarkovChain chain = MarkovChain::from_weights(target, w);
                Entropies e = entropies(chain);
                std::cout << "h_q " << e.h_q << "\nh_d_given_q " << e.h_d_given_q
                          << "\nh_p_given_q " << e.h_p_given_q << "\nlower "
                          << markov_lower_bound(t, target.graph(), chain) << "\nhom "
                          << dec(exact) << "\n";
            }
        } else if (*verify) {
            CheckReport r = run_check(verify_id, sweep);
            print_report(r, verify_json);
            return r.status == CheckStatus::Fail ? 1 : 0;
        } else if (*repro) {
            CheckReport r = reproduce_counterexample(repro_id);
            print_report(r, repro_json);
            return r.status == CheckStatus::Fail ? 1 : 0;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
