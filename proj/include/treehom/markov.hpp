#pragma once

#include <utility>
#include <vector>

#include "treehom/graph.hpp"
#include "treehom/ints.hpp"

namespace treehom {

// Transition kernel supported on the edges of a graph together with its
// stationary distribution. Kernels are exact rationals when produced by
// weight elimination or the degree walk, and floats for spectral kernels.
class MarkovChain {
public:
    // The unique reversible chain on a tree whose stationary distribution is
    // proportional to the given positive weights, built by leaf elimination:
    // the flow on a pendant edge equals the leaf's weight, interior flows
    // follow by conservation. Throws if some flow is forced nonpositive or
    // the weights do not balance.
    static MarkovChain from_weights(const Tree& t, const std::vector<Rat>& weights);

    // Simple random walk p_ij = 1/d_i with q_i = d_i / 2e. Any graph with at
    // least one edge and no isolated vertices.
    static MarkovChain random_walk(const Graph& g);

    // Float kernel with a precomputed stationary distribution.
    static MarkovChain from_float_kernel(Graph g, std::vector<std::vector<double>> p,
                                         std::vector<double> q);

    // Exact kernel given outright; validated.
    static MarkovChain from_exact_kernel(Graph g, std::vector<std::vector<Rat>> p,
                                         std::vector<Rat> q);

    // Float chain with q_i = y_i^2 from the Perron vector; its lower bound
    // is the spectral bound.
    static MarkovChain spectral(const Graph& g);

    const Graph& graph() const { return g_; }
    bool exact() const { return exact_; }

    // k-th neighbor transition probability / stationary mass, as doubles.
    double p(int i, int k) const { return pd_[i][k]; }
    double q(int i) const { return qd_[i]; }
    const Rat& p_exact(int i, int k) const;
    const Rat& q_exact(int i) const;

    // Row sums, support, stationarity, and (on trees) reversibility.
    // Exact kernels are checked exactly, float kernels within 1e-12.
    void validate() const;

private:
    MarkovChain() = default;
    Graph g_;
    bool exact_ = false;
    std::vector<std::vector<Rat>> p_;
    std::vector<Rat> q_;
    std::vector<std::vector<double>> pd_;
    std::vector<double> qd_;
};

// New chain on the tree with edge (i, j) subdivided: the new vertex (id n)
// takes weight 2 q_i p_ij and transition 1/2 toward each side; everything
// else is rescaled. Exact chains stay exact.
MarkovChain subdivide_chain(const MarkovChain& c, int i, int j);

struct Entropies {
    double h_q;         // sum q_i ln(1/q_i)
    double h_d_given_q; // sum q_i ln d_i
    double h_p_given_q; // sum_i q_i sum_j p_ij ln(1/p_ij), 0 ln(1/0) = 0
};

Entropies entropies(const MarkovChain& c);

// exp(H(Q) + l H(D|Q) + (m-1-l) H(P|Q)) with l the leaf count of tm and
// m = |V(tm)| >= 3; a lower bound for hom(tm, G) when the chain lives on G.
double markov_lower_bound(const Tree& tm, const Graph& g, const MarkovChain& c);

struct SpectralData {
    double lambda;         // Perron eigenvalue
    std::vector<double> y; // positive unit eigenvector
    std::vector<double> q; // y_i^2
    double h_lambda;       // Shannon entropy of q
};

// Power iteration (shift by +1 so bipartite targets converge) down to the
// requested residual; throws if it fails to converge or g is not connected.
SpectralData spectral_data(const Graph& g, double residual_target = 1e-10);

struct SpectralBound {
    double lambda;
    double h_lambda;
    double lower;      // exp(H_lambda) * lambda^(m-1)  <= hom(tm, g)
    double path_upper; // n * lambda^(m-1)              >= hom(P_m, g)
};

SpectralBound spectral_bound(const Tree& tm, const Graph& g);

// 2e * C^(m-2) with C = (prod d_i^(d_i))^(1/2e); m >= 2, g with an edge.
double degree_bound(const Tree& tm, const Graph& g);

struct SidorenkoResult {
    double t_tree;       // hom(tm, g) / n^m
    double t_edge_power; // (2e/n^2)^(m-1)
    bool holds;          // t_tree >= t_edge_power (log-domain, 1e-9 slack)
};

SidorenkoResult sidorenko_check(const Tree& tm, const Graph& g);

// ---- named weight templates -------------------------------------------------

// 3-leaf spider with min(a,b,c) >= 2: arms weighted 1, 4 from the leaf then
// 6 on every subdivision vertex, center 9. Total weight 6(n-3).
std::pair<Tree, std::vector<Rat>> spider_chain(int a, int b, int c);

// Spider with arms a, b >= 3 and a pendant leaf: arms weighted 1, 4, 9 from
// the leaf then 12 on every subdivision vertex, center 16, pendant leaf 4.
// Total weight 12(n-4).
std::pair<Tree, std::vector<Rat>> spider_pendant_chain(int a, int b);

// Weights 4 on the path between the two degree-3 vertices, 2 on off-path
// degree-2 vertices, 1 on leaves. The tree must have exactly four leaves and
// exactly two vertices of degree 3 (all others of degree at most 2).
std::vector<Rat> weak_four_leaf_weights(const Tree& t);

} // namespace treehom
