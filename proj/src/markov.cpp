#include "treehom/markov.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "treehom/homcount.hpp"

namespace treehom {

namespace {

double xlogx_inv(double p) { return p > 0 ? p * std::log(1.0 / p) : 0.0; }

int neighbor_slot(const Graph& g, int i, int j) {
    const auto& nb = g.neighbors(i);
    auto it = std::lower_bound(nb.begin(), nb.end(), j);
    if (it == nb.end() || *it != j) throw Error("edge absent");
    return static_cast<int>(it - nb.begin());
}

} // namespace

const Rat& MarkovChain::p_exact(int i, int k) const {
    if (!exact_) throw Error("chain kernel is not exact");
    return p_[i][k];
}

const Rat& MarkovChain::q_exact(int i) const {
    if (!exact_) throw Error("chain kernel is not exact");
    return q_[i];
}

MarkovChain MarkovChain::from_exact_kernel(Graph g, std::vector<std::vector<Rat>> p,
                                           std::vector<Rat> q) {
    MarkovChain c;
    c.g_ = std::move(g);
    c.exact_ = true;
    c.p_ = std::move(p);
    c.q_ = std::move(q);
    int n = c.g_.vertex_count();
    c.pd_.resize(n);
    c.qd_.resize(n);
    for (int i = 0; i < n; ++i) {
        c.q_[i].canonicalize();
        c.qd_[i] = c.q_[i].get_d();
        c.pd_[i].resize(c.p_[i].size());
        for (size_t k = 0; k < c.p_[i].size(); ++k) {
            c.p_[i][k].canonicalize();
            c.pd_[i][k] = c.p_[i][k].get_d();
        }
    }
    c.validate();
    return c;
}

MarkovChain MarkovChain::from_weights(const Tree& t, const std::vector<Rat>& weights) {
    const Graph& g = t.graph();
    int n = g.vertex_count();
    if (static_cast<int>(weights.size()) != n) throw Error("one weight per vertex required");
    for (const Rat& w : weights)
        if (w <= 0) throw Error("weights must be positive");
    if (n == 1) throw Error("chain needs at least one edge");

    // Leaf elimination. residual[v] is the weight not yet covered by flows on
    // eliminated edges at v; when a vertex becomes a leaf of the remaining
    // tree its last edge's flow is forced.
    std::vector<Rat> residual(weights.begin(), weights.end());
    std::vector<int> live_degree(n);
    std::vector<char> done(n, 0);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
        live_degree[v] = g.degree(v);
        if (live_degree[v] == 1) queue.push_back(v);
    }
    std::map<std::pair<int, int>, Rat> flow;
    int processed = 0;
    while (!queue.empty() && processed < n - 1) {
        int u = queue.back();
        queue.pop_back();
        if (done[u]) continue;
        int to = -1;
        for (int w : g.neighbors(u))
            if (!done[w]) to = w;
        if (to < 0) break;
        Rat f = residual[u];
        if (f <= 0)
            throw Error("weights admit no chain: nonpositive flow on edge (" + std::to_string(u) +
                        "," + std::to_string(to) + ")");
        flow[{std::min(u, to), std::max(u, to)}] = f;
        residual[to] -= f;
        done[u] = 1;
        ++processed;
        if (--live_degree[to] == 1) queue.push_back(to);
    }
    if (processed != n - 1) throw Error("weights admit no chain: elimination stalled");
    for (int v = 0; v < n; ++v)
        if (!done[v] && residual[v] != 0)
            throw Error("weights admit no chain: imbalance at vertex " + std::to_string(v));

    Rat total = 0;
    for (const Rat& w : weights) total += w;
    std::vector<std::vector<Rat>> p(n);
    std::vector<Rat> q(n);
    for (int i = 0; i < n; ++i) {
        q[i] = weights[i] / total;
        const auto& nb = g.neighbors(i);
        p[i].resize(nb.size());
        for (size_t k = 0; k < nb.size(); ++k)
            p[i][k] = flow.at({std::min(i, nb[k]), std::max(i, nb[k])}) / weights[i];
    }
    return from_exact_kernel(g, std::move(p), std::move(q));
}

MarkovChain MarkovChain::random_walk(const Graph& g) {
    int n = g.vertex_count();
    if (g.edge_count() == 0) throw Error("random walk needs an edge");
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) throw Error("random walk needs no isolated vertices");
    std::vector<std::vector<Rat>> p(n);
    std::vector<Rat> q(n);
    for (int i = 0; i < n; ++i) {
        q[i] = Rat(g.degree(i), 2 * static_cast<unsigned long>(g.edge_count()));
        p[i].assign(g.neighbors(i).size(), Rat(1, static_cast<unsigned long>(g.degree(i))));
    }
    return from_exact_kernel(g, std::move(p), std::move(q));
}

MarkovChain MarkovChain::from_float_kernel(Graph g, std::vector<std::vector<double>> p,
                                           std::vector<double> q) {
    MarkovChain c;
    c.g_ = std::move(g);
    c.exact_ = false;
    c.pd_ = std::move(p);
    c.qd_ = std::move(q);
    c.validate();
    return c;
}

MarkovChain MarkovChain::spectral(const Graph& g) {
    SpectralData d = spectral_data(g, 1e-13);
    int n = g.vertex_count();
    std::vector<std::vector<double>> p(n);
    std::vector<double> q(n);
    for (int i = 0; i < n; ++i) {
        q[i] = d.y[i] * d.y[i];
        const auto& nb = g.neighbors(i);
        double row = 0;
        for (int j : nb) row += d.y[j];
        p[i].resize(nb.size());
        for (size_t k = 0; k < nb.size(); ++k) p[i][k] = d.y[nb[k]] / row;
    }
    return from_float_kernel(g, std::move(p), std::move(q));
}

void MarkovChain::validate() const {
    int n = g_.vertex_count();
    const double tol = 1e-12;
    bool tree = g_.edge_count() == n - 1 && g_.is_connected();
    if (exact_) {
        Rat qsum = 0;
        for (int i = 0; i < n; ++i) {
            Rat row = 0;
            for (const Rat& pij : p_[i]) {
                if (pij < 0) throw Error("negative transition probability");
                row += pij;
            }
            if (row != 1) throw Error("row sum is not one");
            qsum += q_[i];
        }
        if (qsum != 1) throw Error("stationary distribution does not sum to one");
        for (int i = 0; i < n; ++i) {
            Rat in_flow = 0;
            const auto& nb = g_.neighbors(i);
            for (size_t k = 0; k < nb.size(); ++k) {
                int j = nb[k];
                in_flow += q_[j] * p_[j][neighbor_slot(g_, j, i)];
            }
            if (in_flow != q_[i]) throw Error("distribution is not stationary");
            if (tree) {
                for (size_t k = 0; k < nb.size(); ++k) {
                    int j = nb[k];
                    if (q_[i] * p_[i][k] != q_[j] * p_[j][neighbor_slot(g_, j, i)])
                        throw Error("tree chain is not reversible");
                }
            }
        }
    } else {
        double qsum = 0;
        for (int i = 0; i < n; ++i) {
            double row = 0;
            for (double pij : pd_[i]) {
                if (pij < -tol) throw Error("negative transition probability");
                row += pij;
            }
            if (std::abs(row - 1.0) > tol) throw Error("row sum is not one");
            qsum += qd_[i];
        }
        if (std::abs(qsum - 1.0) > tol) throw Error("stationary distribution does not sum to one");
        for (int i = 0; i < n; ++i) {
            double in_flow = 0;
            const auto& nb = g_.neighbors(i);
            for (size_t k = 0; k < nb.size(); ++k) {
                int j = nb[k];
                in_flow += qd_[j] * pd_[j][neighbor_slot(g_, j, i)];
            }
            if (std::abs(in_flow - qd_[i]) > tol) throw Error("distribution is not stationary");
        }
    }
}

MarkovChain subdivide_chain(const MarkovChain& c, int i, int j) {
    const Graph& g = c.graph();
    int n = g.vertex_count();
    if (g.edge_count() != n - 1 || !g.is_connected())
        throw Error("subdivide_chain expects a tree chain");
    if (!c.exact()) throw Error("subdivide_chain expects an exact kernel");
    int slot_ij = neighbor_slot(g, i, j); // throws if the edge is absent
    int r = n;
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges())
        if (!((a == i && b == j) || (a == j && b == i))) edges.emplace_back(a, b);
    edges.emplace_back(i, r);
    edges.emplace_back(r, j);
    Graph gsub(n + 1, edges);

    // Local rewrite: the new vertex carries weight 2 q_i p_ij and splits
    // evenly; the endpoints keep their transition mass, redirected to r.
    Rat f = 2 * c.q_exact(i) * c.p_exact(i, slot_ij);
    Rat scale = 1 + f;
    std::vector<Rat> q(n + 1);
    for (int v = 0; v < n; ++v) q[v] = c.q_exact(v) / scale;
    q[r] = f / scale;
    std::vector<std::vector<Rat>> p(n + 1);
    for (int v = 0; v < n; ++v) {
        const auto& nb_new = gsub.neighbors(v);
        p[v].resize(nb_new.size());
        for (size_t k = 0; k < nb_new.size(); ++k) {
            int w = nb_new[k];
            int old_w = (w == r) ? (v == i ? j : i) : w;
            p[v][k] = c.p_exact(v, neighbor_slot(g, v, old_w));
        }
    }
    p[r] = {Rat(1, 2), Rat(1, 2)};
    return MarkovChain::from_exact_kernel(std::move(gsub), std::move(p), std::move(q));
}

Entropies entropies(const MarkovChain& c) {
    const Graph& g = c.graph();
    Entropies e{0.0, 0.0, 0.0};
    for (int i = 0; i < g.vertex_count(); ++i) {
        double qi = c.q(i);
        e.h_q += xlogx_inv(qi);
        e.h_d_given_q += qi * std::log(static_cast<double>(g.degree(i)));
        double row = 0;
        for (size_t k = 0; k < g.neighbors(i).size(); ++k)
            row += xlogx_inv(c.p(i, static_cast<int>(k)));
        e.h_p_given_q += qi * row;
    }
    return e;
}

double markov_lower_bound(const Tree& tm, const Graph& g, const MarkovChain& c) {
    int m = tm.vertex_count();
    if (m < 3) throw Error("markov_lower_bound needs m >= 3");
    if (c.graph().vertex_count() != g.vertex_count() || c.graph().edges() != g.edges())
        throw Error("chain is not defined on the target graph");
    int leaves = leaf_count(tm.graph());
    Entropies e = entropies(c);
    return std::exp(e.h_q + leaves * e.h_d_given_q + (m - 1 - leaves) * e.h_p_given_q);
}

SpectralData spectral_data(const Graph& g, double residual_target) {
    int n = g.vertex_count();
    if (n == 0 || !g.is_connected()) throw Error("spectral data needs a connected graph");
    std::vector<double> y(n, 1.0 / std::sqrt(static_cast<double>(n))), z(n);
    double lambda = 0;
    const int max_iter = 100000;
    bool converged = false;
    for (int it = 0; it < max_iter; ++it) {
        // one step of (A + I); the shift keeps bipartite spectra from
        // oscillating and leaves the Perron vector unchanged
        for (int i = 0; i < n; ++i) {
            double s = y[i];
            for (int j : g.neighbors(i)) s += y[j];
            z[i] = s;
        }
        double norm = 0;
        for (double v : z) norm += v * v;
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) y[i] = z[i] / norm;
        // Rayleigh quotient and residual on A itself
        lambda = 0;
        for (int i = 0; i < n; ++i) {
            double s = 0;
            for (int j : g.neighbors(i)) s += y[j];
            z[i] = s;
            lambda += y[i] * s;
        }
        double resid = 0;
        for (int i = 0; i < n; ++i) resid = std::max(resid, std::abs(z[i] - lambda * y[i]));
        if (resid <= residual_target) {
            converged = true;
            break;
        }
    }
    if (!converged) throw Error("power iteration did not converge");
    SpectralData d;
    d.lambda = lambda;
    d.y = y;
    d.q.resize(n);
    d.h_lambda = 0;
    for (int i = 0; i < n; ++i) {
        d.q[i] = y[i] * y[i];
        d.h_lambda += xlogx_inv(d.q[i]);
    }
    return d;
}

SpectralBound spectral_bound(const Tree& tm, const Graph& g) {
    SpectralData d = spectral_data(g);
    int m = tm.vertex_count();
    SpectralBound b;
    b.lambda = d.lambda;
    b.h_lambda = d.h_lambda;
    b.lower = std::exp(d.h_lambda) * std::pow(d.lambda, m - 1);
    b.path_upper = g.vertex_count() * std::pow(d.lambda, m - 1);
    return b;
}

double degree_bound(const Tree& tm, const Graph& g) {
    if (g.edge_count() == 0) throw Error("degree bound needs a graph with an edge");
    int m = tm.vertex_count();
    if (m < 2) throw Error("degree bound needs m >= 2");
    double two_e = 2.0 * g.edge_count();
    double log_c = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0) log_c += g.degree(v) * std::log(static_cast<double>(g.degree(v)));
    log_c /= two_e;
    return two_e * std::exp((m - 2) * log_c);
}

SidorenkoResult sidorenko_check(const Tree& tm, const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw Error("sidorenko check needs a nonempty target");
    int m = tm.vertex_count();
    SidorenkoResult r;
    if (m == 1) {
        r.t_tree = 1.0;
        r.t_edge_power = 1.0;
        r.holds = true;
        return r;
    }
    if (g.edge_count() == 0) {
        r.t_tree = 0.0;
        r.t_edge_power = 0.0;
        r.holds = true;
        return r;
    }
    double log_n = std::log(static_cast<double>(n));
    double log_t_edge = (m - 1) * (std::log(2.0 * g.edge_count()) - 2 * log_n);
    double log_t_tree = log_int(hom_count(tm, g)) - m * log_n;
    r.t_tree = std::exp(log_t_tree);
    r.t_edge_power = std::exp(log_t_edge);
    r.holds = log_t_tree >= log_t_edge - 1e-9;
    return r;
}

std::pair<Tree, std::vector<Rat>> spider_chain(int a, int b, int c) {
    if (std::min({a, b, c}) < 2) throw Error("spider_chain needs arm lengths >= 2");
    Tree t = make_spider(a, b, c);
    int n = t.vertex_count();
    std::vector<Rat> w(n, Rat(6)); // subdivision vertices next to the center
    w[0] = 9;                      // center
    int base = 1;
    for (int len : {a, b, c}) {
        w[base + len - 1] = 1; // leaf
        w[base + len - 2] = 4; // its neighbor
        base += len;
    }
    return {std::move(t), std::move(w)};
}

std::pair<Tree, std::vector<Rat>> spider_pendant_chain(int a, int b) {
    if (std::min(a, b) < 3) throw Error("spider_pendant_chain needs arm lengths >= 3");
    Tree t = make_spider(a, b, 1);
    int n = t.vertex_count();
    std::vector<Rat> w(n, Rat(12)); // subdivision vertices next to the center
    w[0] = 16;                      // center
    int base = 1;
    for (int len : {a, b}) {
        w[base + len - 1] = 1; // leaf
        w[base + len - 2] = 4;
        w[base + len - 3] = 9;
        base += len;
    }
    w[n - 1] = 4; // pendant leaf
    return {std::move(t), std::move(w)};
}

std::vector<Rat> weak_four_leaf_weights(const Tree& t) {
    const Graph& g = t.graph();
    int n = g.vertex_count();
    std::vector<int> deg3;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > 3) throw Error("weak_four_leaf_weights: degree above 3");
        if (g.degree(v) == 3) deg3.push_back(v);
    }
    if (deg3.size() != 2 || leaf_count(g) != 4)
        throw Error("weak_four_leaf_weights: need exactly four leaves and two degree-3 vertices");
    std::vector<int> parent(n, -2), stack{deg3[0]};
    parent[deg3[0]] = -1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u))
            if (parent[w] == -2) {
                parent[w] = u;
                stack.push_back(w);
            }
    }
    std::vector<char> on_path(n, 0);
    for (int v = deg3[1]; v != -1; v = parent[v]) on_path[v] = 1;
    std::vector<Rat> w(n);
    for (int v = 0; v < n; ++v) {
        if (on_path[v])
            w[v] = 4;
        else if (g.degree(v) == 1)
            w[v] = 1;
        else
            w[v] = 2;
    }
    return w;
}

} // namespace treehom
