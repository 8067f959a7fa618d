#pragma once

#include <string>
#include <utility>
#include <vector>

#include "treehom/graph.hpp"
#include "treehom/ints.hpp"

namespace treehom {

// Per-target-vertex homomorphism counts of a rooted tree; entry i is the
// number of homomorphisms pinning the root to target vertex i. The norm
// (entry sum) is the plain homomorphism count.
struct HomVector {
    std::vector<Int> entries;

    int target_size() const { return static_cast<int>(entries.size()); }
    Int norm() const;
    const Int& operator[](size_t i) const { return entries[i]; }
    bool operator==(const HomVector&) const = default;
};

HomVector all_ones(int n);
HomVector hadamard(const HomVector& a, const HomVector& b);
// v -> vA over the target's neighbor lists: out[i] = sum of v[j], j ~ i.
HomVector adjacency_apply(const Graph& g, const HomVector& v);

// Post-order dynamic program: leaf subtrees are all-ones, sibling branches
// combine by entrywise product, and each edge toward the root applies the
// target adjacency as a neighbor sum.
HomVector hom_vector(const Tree& t, int root, const Graph& g);

Int hom_count(const Tree& t, const Graph& g);

// Direct enumeration of every map V(H) -> V(G); refuses (throws BudgetError)
// when |V(G)|^|V(H)| exceeds map_budget rather than returning a truncated
// count. H may be any graph.
Int hom_brute_force(const Graph& h, const Graph& g, double map_budget = 1e8);

// Closed walks of length m, i.e. trace of A^m. m >= 3.
Int hom_cycle(int m, const Graph& g);

// Counts of homomorphisms into the odd path P_n splitting by the parity of
// the image of u: first component = image at even 1-based index, second =
// odd index. Rejects even n.
std::pair<Int, Int> hom_parity_split(const Tree& t, int u, int n);

// Product h_A * h_B, where h_A (h_B) counts homomorphisms of t1 into t2
// sending a fixed vertex into color class A (B) of t2. Independent of the
// fixed vertex.
Int g_product(const Tree& t1, const Tree& t2);

// ---- closed forms ---------------------------------------------------------

Int end_star(int n);                      // (n-1)^(n-1) + (n-1)
Int star_to_path(int m, int n);           // (n-2) 2^(m-1) + 2
Int tree_to_star(const Tree& t, int n);   // (n-1)^|A| + (n-1)^|B|
Int doublestar_to_star(int k);            // 2 (2k-1)^k
Int star_to_graph(int m, const Graph& g); // sum of d_i^(m-1)
Int closed_form(const std::string& kind, const std::vector<long>& params);

// ---- symmetric-vector order and shape predicates ---------------------------

enum class VectorOrder { Equal, LessEqual, GreaterEqual, Incomparable };

// Dominance order on symmetric vectors: a <= b iff every central window sum
// sum_{i=k..n+1-k} a_i is at most the same sum for b. Inputs must be
// symmetric and of equal length.
VectorOrder dominance_compare(const std::vector<Int>& a, const std::vector<Int>& b);

bool is_symmetric(const std::vector<Int>& a);
bool is_unimodal(const std::vector<Int>& a);
bool is_symmetric_unimodal(const std::vector<Int>& a);
// Symmetric, and the odd-indexed and even-indexed subsequences are unimodal.
bool is_symmetric_bi_unimodal(const std::vector<Int>& a);
// a_i a_j <= a_{i+1} a_{j-1} for all 1-based i < j of opposite parity.
bool is_log_concave_alternating(const std::vector<Int>& a);
// a_i b_j >= a_j b_i whenever i = j (mod 2) and i is at least as close to the
// center (n+1)/2 as j (1-based).
bool correlation_pair_holds(const std::vector<Int>& a, const std::vector<Int>& b);

} // namespace treehom
