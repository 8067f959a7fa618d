#pragma once

#include <string>
#include <utility>
#include <vector>

#include "treehom/canonical.hpp"
#include "treehom/graph.hpp"

namespace treehom {

// All unlabeled trees on n vertices, one representative per isomorphism
// class, sorted by canonical code. 1 <= n <= 16.
std::vector<Tree> enumerate_trees(int n);

// Cached view of enumerate_trees.
const std::vector<Tree>& trees_of_order(int n);

struct PosetNode {
    Code code;
    Tree tree;
    int leaves;
    int rank; // leaves - 2
};

// Hasse diagram of the KC order on n-vertex trees: an edge (lower, upper)
// records that some nontrivial KC move maps the lower tree to (a tree
// isomorphic to) the upper one. The construction verifies gradedness with
// rank = leaf count - 2 and unique extremes (path at the bottom, star at
// the top) and throws if any of it fails.
struct PosetDiagram {
    int n = 0;
    std::vector<PosetNode> nodes;
    std::vector<std::pair<int, int>> hasse_edges; // sorted
    int min_index = -1;                           // the path
    int max_index = -1;                           // the star
};

PosetDiagram build_kc_poset(int n); // 2 <= n <= 12

// DOT digraph, byte-deterministic. Node labels: code hex + leaf count.
std::string export_dot(const PosetDiagram& p);

} // namespace treehom
