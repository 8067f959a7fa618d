#include "treehom/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace treehom {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 0) throw Error("negative vertex count");
    adj_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw Error("edge endpoint out of range");
        if (u == v) throw Error("self-loop");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw Error("duplicate edge");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    m_ = static_cast<int>(edge_list.size());
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    e.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) e.emplace_back(u, v);
    return e;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> vis(n_, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj_[u])
            if (!vis[v]) {
                vis[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == n_;
}

Tree::Tree(Graph g, std::optional<int> root) : g_(std::move(g)), root_(root) {
    int n = g_.vertex_count();
    if (n < 1) throw Error("tree must have at least one vertex");
    if (g_.edge_count() != n - 1) throw Error("tree must have n-1 edges");
    if (!g_.is_connected()) throw Error("tree must be connected");
    if (root_ && (*root_ < 0 || *root_ >= n)) throw Error("root out of range");
    color_.assign(n, -1);
    std::vector<int> stack{0};
    color_[0] = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g_.neighbors(u))
            if (color_[v] < 0) {
                color_[v] = 1 - color_[u];
                stack.push_back(v);
            }
    }
    for (int v = 0; v < n; ++v) ++class_size_[color_[v]];
}

Tree Tree::with_root(int r) const {
    Tree t(*this);
    if (r < 0 || r >= vertex_count()) throw Error("root out of range");
    t.root_ = r;
    return t;
}

std::pair<int, int> Tree::class_sizes() const {
    return {std::min(class_size_[0], class_size_[1]), std::max(class_size_[0], class_size_[1])};
}

int Tree::small_class() const {
    if (class_size_[0] == class_size_[1]) throw Error("color classes have equal size");
    return class_size_[0] < class_size_[1] ? 0 : 1;
}

// ---- parsing -------------------------------------------------------------

namespace {

struct Line {
    int no;
    std::vector<long> nums;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        size_t i = raw.find_first_not_of(" \t\r");
        if (i == std::string::npos || raw[i] == '#') continue;
        std::istringstream ls(raw);
        Line line{no, {}};
        std::string tok;
        while (ls >> tok) {
            try {
                size_t pos = 0;
                long v = std::stol(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
                line.nums.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("expected integer, got '" + tok + "'", no);
            }
        }
        out.push_back(std::move(line));
    }
    return out;
}

std::vector<std::pair<int, int>> read_edges(const std::vector<Line>& lines, size_t first,
                                            size_t count, int n, bool one_based) {
    if (lines.size() - first < count)
        throw ParseError("expected " + std::to_string(count) + " edge lines",
                         lines.empty() ? 1 : lines.back().no);
    if (lines.size() - first > count)
        throw ParseError("unexpected extra line", lines[first + count].no);
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (size_t i = 0; i < count; ++i) {
        const Line& l = lines[first + i];
        if (l.nums.size() != 2) throw ParseError("expected 'u v'", l.no);
        long u = l.nums[0], v = l.nums[1];
        if (one_based) {
            --u;
            --v;
        }
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("vertex out of range", l.no);
        if (u == v) throw ParseError("self-loop", l.no);
        if (!seen.insert(std::minmax(u, v)).second) throw ParseError("duplicate edge", l.no);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return edges;
}

} // namespace

Graph parse_graph_file(const std::string& text, bool one_based) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("empty input", 1);
    if (lines[0].nums.size() != 2) throw ParseError("expected header 'n m'", lines[0].no);
    long n = lines[0].nums[0], m = lines[0].nums[1];
    if (n < 0 || m < 0) throw ParseError("negative header value", lines[0].no);
    auto edges = read_edges(lines, 1, static_cast<size_t>(m), static_cast<int>(n), one_based);
    return Graph(static_cast<int>(n), edges);
}

Tree parse_tree_file(const std::string& text, bool one_based) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("empty input", 1);
    if (lines[0].nums.size() != 1) throw ParseError("expected header 'n'", lines[0].no);
    long n = lines[0].nums[0];
    if (n < 1) throw ParseError("tree needs at least one vertex", lines[0].no);
    auto edges = read_edges(lines, 1, static_cast<size_t>(n - 1), static_cast<int>(n), one_based);
    Graph g(static_cast<int>(n), edges);
    if (!g.is_connected()) throw ParseError("disconnected tree input", lines[0].no);
    return Tree(std::move(g));
}

std::variant<Graph, Tree> parse_any_file(const std::string& text, bool one_based) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("empty input", 1);
    if (lines[0].nums.size() == 1) return parse_tree_file(text, one_based);
    return parse_graph_file(text, one_based);
}

std::string write_graph_file(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string write_tree_file(const Tree& t) {
    std::ostringstream out;
    out << t.vertex_count() << '\n';
    for (auto [u, v] : t.graph().edges()) out << u << ' ' << v << '\n';
    return out.str();
}

// ---- families ------------------------------------------------------------

Tree make_path(int n) {
    if (n < 1) throw Error("path needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Tree(Graph(n, e));
}

Tree make_star(int n) {
    if (n < 1) throw Error("star needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Tree(Graph(n, e));
}

Graph make_cycle(int m) {
    if (m < 3) throw Error("cycle needs m >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < m; ++i) e.emplace_back(i, (i + 1) % m);
    return Graph(m, e);
}

Tree make_spider(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw Error("spider arm lengths must be positive");
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (int len : {a, b, c}) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Tree(Graph(next, e));
}

Tree make_doublestar(int k) {
    if (k < 2) throw Error("doublestar needs k >= 2");
    std::vector<std::pair<int, int>> e{{0, 1}};
    int next = 2;
    for (int i = 0; i < k - 1; ++i) e.emplace_back(0, next++);
    for (int i = 0; i < k - 1; ++i) e.emplace_back(1, next++);
    return Tree(Graph(2 * k, e));
}

Tree make_e7() {
    std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}};
    return Tree(Graph(7, e));
}

Tree make_layered(int k1, int k2, int k3) {
    if (k1 < 1 || k2 < 1 || k3 < 1) throw Error("layer sizes must be positive");
    std::vector<std::pair<int, int>> e;
    int next = 1;
    std::vector<int> level1, level2;
    for (int i = 0; i < k1; ++i) {
        e.emplace_back(0, next);
        level1.push_back(next++);
    }
    for (int p : level1)
        for (int i = 0; i < k2; ++i) {
            e.emplace_back(p, next);
            level2.push_back(next++);
        }
    for (int p : level2)
        for (int i = 0; i < k3; ++i) e.emplace_back(p, next++);
    return Tree(Graph(next, e));
}

Tree make_double_cherry_path(int n) {
    if (n < 10) throw Error("double cherry path needs n >= 10");
    int core = n - 8;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < core; ++i) e.emplace_back(i, i + 1);
    int next = core;
    for (int end : {0, core - 1}) {
        for (int arm = 0; arm < 2; ++arm) {
            e.emplace_back(end, next);
            e.emplace_back(next, next + 1);
            next += 2;
        }
    }
    return Tree(Graph(n, e));
}

// ---- metrics ---------------------------------------------------------------

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
    std::sort(d.rbegin(), d.rend());
    return d;
}

long long wiener_index(const Graph& g) {
    long long w = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int d : bfs_distances(g, u)) {
            if (d < 0) throw Error("wiener index needs a connected graph");
            w += d;
        }
    return w;
}

int diameter(const Graph& g) {
    int d = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int x : bfs_distances(g, u)) {
            if (x < 0) throw Error("diameter needs a connected graph");
            d = std::max(d, x);
        }
    return d;
}

int leaf_count(const Graph& g) {
    int c = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) ++c;
    return c;
}

bool is_starlike(const Graph& g) {
    int big = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 2) ++big;
    return big <= 1;
}

TreeMetrics tree_metrics(const Tree& t) {
    TreeMetrics m;
    m.leaves = leaf_count(t.graph());
    m.degree_sequence = degree_sequence(t.graph());
    m.diameter = diameter(t.graph());
    m.wiener_index = wiener_index(t.graph());
    m.bipartition_sizes = t.class_sizes();
    m.is_starlike = is_starlike(t.graph());
    return m;
}

} // namespace treehom
