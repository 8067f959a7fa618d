#include "treehom/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "treehom/transforms.hpp"

namespace treehom {

namespace {

Tree tree_from_levels(const std::vector<int>& level) {
    int n = static_cast<int>(level.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) {
        for (int j = i - 1; j >= 0; --j)
            if (level[j] == level[i] - 1) {
                edges.emplace_back(j, i);
                break;
            }
    }
    return Tree(Graph(n, edges));
}

} // namespace

std::vector<Tree> enumerate_trees(int n) {
    if (n < 1 || n > 16) throw Error("enumerate_trees supports 1 <= n <= 16");
    std::map<Code, Tree> classes;
    if (n == 1) {
        Tree t(Graph(1, {}));
        classes.emplace(canonical_code(t), t);
    } else {
        // Beyer-Hedetniemi successor walk over canonical level sequences of
        // rooted trees; free trees deduped by centroid-rooted code.
        std::vector<int> level(n);
        for (int i = 0; i < n; ++i) level[i] = i; // the rooted path
        while (true) {
            Tree t = tree_from_levels(level);
            classes.emplace(canonical_code(t), std::move(t));
            int p = -1;
            for (int i = n - 1; i >= 0; --i)
                if (level[i] > 1) {
                    p = i;
                    break;
                }
            if (p < 0) break; // the star: all non-root levels are 1
            int q = -1;
            for (int i = p - 1; i >= 0; --i)
                if (level[i] == level[p] - 1) {
                    q = i;
                    break;
                }
            for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
        }
    }
    std::vector<Tree> out;
    out.reserve(classes.size());
    for (auto& [code, tree] : classes) out.push_back(std::move(tree));
    return out;
}

const std::vector<Tree>& trees_of_order(int n) {
    static std::map<int, std::vector<Tree>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, enumerate_trees(n)).first;
    return it->second;
}

PosetDiagram build_kc_poset(int n) {
    if (n < 2 || n > 12) throw Error("build_kc_poset supports 2 <= n <= 12");
    PosetDiagram p;
    p.n = n;
    std::unordered_map<Code, int> index;
    for (const Tree& t : trees_of_order(n)) {
        PosetNode node{canonical_code(t), t, leaf_count(t.graph()), 0};
        node.rank = node.leaves - 2;
        index.emplace(node.code, static_cast<int>(p.nodes.size()));
        p.nodes.push_back(std::move(node));
    }
    std::set<std::pair<int, int>> edges;
    for (size_t i = 0; i < p.nodes.size(); ++i) {
        for (const KCMove& m : enumerate_kc_moves(p.nodes[i].tree)) {
            if (m.trivial) continue;
            Tree moved = kc_apply(p.nodes[i].tree, m);
            auto it = index.find(canonical_code(moved));
            if (it == index.end()) throw Error("kc poset: move left the enumerated class set");
            int j = it->second;
            if (p.nodes[j].leaves != p.nodes[i].leaves + 1)
                throw Error("kc poset: nontrivial move did not add exactly one leaf");
            edges.emplace(static_cast<int>(i), j);
        }
    }
    p.hasse_edges.assign(edges.begin(), edges.end());
    for (size_t i = 0; i < p.nodes.size(); ++i) {
        if (p.nodes[i].rank != p.nodes[i].leaves - 2) throw Error("kc poset: rank inconsistency");
        if (p.nodes[i].leaves == 2) {
            if (p.min_index >= 0) throw Error("kc poset: minimum not unique");
            p.min_index = static_cast<int>(i);
        }
        if (p.nodes[i].leaves == std::max(n - 1, 2)) {
            if (p.max_index >= 0 && p.max_index != static_cast<int>(i))
                throw Error("kc poset: maximum not unique");
            if (p.max_index < 0) p.max_index = static_cast<int>(i);
        }
    }
    if (p.min_index < 0 || p.max_index < 0) throw Error("kc poset: missing extremes");
    return p;
}

std::string export_dot(const PosetDiagram& p) {
    std::ostringstream out;
    out << "digraph kc_poset {\n";
    out << "  rankdir=BT;\n";
    for (size_t i = 0; i < p.nodes.size(); ++i) {
        out << "  n" << i << " [label=\"" << code_hex(p.nodes[i].code) << " leaves="
            << p.nodes[i].leaves << "\"];\n";
    }
    for (auto [a, b] : p.hasse_edges) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace treehom
