#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace treehom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse failure carrying the 1-based line number of the offending input line.
struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

struct BudgetError : Error {
    using Error::Error;
};

// Finite simple undirected graph with sorted neighbor lists.
// Immutable after construction; construction validates simplicity.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const; // u < v, sorted
    bool is_connected() const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// A tree is a connected graph on n vertices with n-1 edges. Carries an
// optional root and the 2-coloring (color of vertex 0 is 0).
class Tree {
public:
    explicit Tree(Graph g, std::optional<int> root = std::nullopt);

    const Graph& graph() const { return g_; }
    int vertex_count() const { return g_.vertex_count(); }
    const std::vector<int>& neighbors(int v) const { return g_.neighbors(v); }
    int degree(int v) const { return g_.degree(v); }

    std::optional<int> root() const { return root_; }
    Tree with_root(int r) const;

    int color(int v) const { return color_[v]; }
    int class_size(int c) const { return class_size_[c]; }
    // (smaller, larger) class sizes
    std::pair<int, int> class_sizes() const;
    // Index (0/1) of the strictly smaller color class; throws on a tie.
    int small_class() const;

private:
    Graph g_;
    std::optional<int> root_;
    std::vector<int> color_;
    int class_size_[2] = {0, 0};
};

// ---- file formats ------------------------------------------------------
// Tree file: first line "n", then n-1 lines "u v".
// Graph file: first line "n m", then m lines "u v".
// '#'-prefixed comment lines and blank lines are ignored. Vertex ids are
// 0-based unless one_based is set.

Graph parse_graph_file(const std::string& text, bool one_based = false);
Tree parse_tree_file(const std::string& text, bool one_based = false);
std::variant<Graph, Tree> parse_any_file(const std::string& text, bool one_based = false);

std::string write_graph_file(const Graph& g);
std::string write_tree_file(const Tree& t);

// ---- named families ----------------------------------------------------

Tree make_path(int n);
Tree make_star(int n);
Graph make_cycle(int m); // m >= 3
// 3-leaf spider: one degree-3 vertex at distances a, b, c from the leaves.
Tree make_spider(int a, int b, int c);
// Two adjacent centers of degree k, 2k vertices, 2k-2 leaves.
Tree make_doublestar(int k);
// Path on 6 vertices with a pendant edge on its third vertex.
Tree make_e7();
// Root with k1 children; each of those with k2 children; each of those with k3.
Tree make_layered(int k1, int k2, int k3);
// Path on n-8 vertices with a 5-vertex path glued by its middle vertex to
// each end; n >= 10.
Tree make_double_cherry_path(int n);

// ---- structural metrics --------------------------------------------------

struct TreeMetrics {
    int leaves;
    std::vector<int> degree_sequence; // descending
    int diameter;
    long long wiener_index;           // sum over ordered pairs, d(u,u)=0 included
    std::pair<int, int> bipartition_sizes; // (smaller, larger)
    bool is_starlike;                 // at most one vertex of degree > 2
};

TreeMetrics tree_metrics(const Tree& t);
std::vector<int> degree_sequence(const Graph& g);
long long wiener_index(const Graph& g);
int diameter(const Graph& g);
int leaf_count(const Graph& g);
bool is_starlike(const Graph& g);
std::vector<int> bfs_distances(const Graph& g, int src);

} // namespace treehom
