#include "treehom/transforms.hpp"

#include <algorithm>
#include <map>

#include "treehom/canonical.hpp"

namespace treehom {

namespace {

// Unique x-y path in a tree, endpoints included.
std::vector<int> tree_path(const Graph& g, int x, int y) {
    std::vector<int> parent(g.vertex_count(), -2);
    std::vector<int> stack{x};
    parent[x] = -1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (u == y) break;
        for (int v : g.neighbors(u))
            if (parent[v] == -2) {
                parent[v] = u;
                stack.push_back(v);
            }
    }
    std::vector<int> path;
    for (int v = y; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

std::vector<KCMove> enumerate_kc_moves(const Tree& t) {
    const Graph& g = t.graph();
    int n = g.vertex_count();
    std::vector<KCMove> moves;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            auto path = tree_path(g, x, y);
            bool bare = true;
            for (size_t i = 1; i + 1 < path.size(); ++i)
                if (g.degree(path[i]) != 2) {
                    bare = false;
                    break;
                }
            if (!bare) continue;
            KCMove m;
            m.x = x;
            m.y = y;
            m.odd = (path.size() - 1) % 2 == 1;
            m.trivial = g.degree(x) == 1 || g.degree(y) == 1;
            m.path = std::move(path);
            moves.push_back(std::move(m));
        }
    }
    return moves;
}

Tree kc_apply(const Tree& t, const KCMove& move) {
    const Graph& g = t.graph();
    int n = g.vertex_count();
    if (move.path.size() < 2 || move.path.front() != move.x || move.path.back() != move.y)
        throw Error("stale KC move");
    for (size_t i = 0; i + 1 < move.path.size(); ++i) {
        if (!g.has_edge(move.path[i], move.path[i + 1])) throw Error("stale KC move");
        if (i > 0 && g.degree(move.path[i]) != 2) throw Error("stale KC move");
    }
    int y = move.y;
    int z = move.path[move.path.size() - 2]; // neighbor of y on the path
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges()) {
        if (a == y && b != z) {
            edges.emplace_back(move.x, b);
        } else if (b == y && a != z) {
            edges.emplace_back(a, move.x);
        } else {
            edges.emplace_back(a, b);
        }
    }
    return Tree(Graph(n, edges));
}

Tree glue_at(const Tree& base, int at, const Tree& attach) {
    if (!attach.root()) throw Error("glue_at: attachment needs a root");
    if (at < 0 || at >= base.vertex_count()) throw Error("glue_at: bad attachment vertex");
    int r = *attach.root();
    int nb = base.vertex_count();
    std::vector<int> remap(attach.vertex_count());
    int next = nb;
    for (int v = 0; v < attach.vertex_count(); ++v) remap[v] = (v == r) ? at : next++;
    auto edges = base.graph().edges();
    for (auto [a, b] : attach.graph().edges()) edges.emplace_back(remap[a], remap[b]);
    Graph g(nb + attach.vertex_count() - 1, edges);
    return base.root() ? Tree(std::move(g), *base.root()) : Tree(std::move(g));
}

namespace {

// Rooted subtree embedding by recursion with bipartite matching of children.
struct Embedder {
    const Tree& sub;
    const Tree& host;
    std::vector<std::vector<int>> schild, hchild;
    std::map<std::pair<int, int>, int> memo; // -1 unknown handled by find

    Embedder(const Tree& s, const Tree& h) : sub(s), host(h) {
        schild = children_of(s);
        hchild = children_of(h);
    }

    static std::vector<std::vector<int>> children_of(const Tree& t) {
        int n = t.vertex_count();
        std::vector<std::vector<int>> ch(n);
        std::vector<int> parent(n, -2), stack{*t.root()};
        parent[*t.root()] = -1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : t.neighbors(u))
                if (parent[v] == -2) {
                    parent[v] = u;
                    ch[u].push_back(v);
                    stack.push_back(v);
                }
        }
        return ch;
    }

    bool embeds(int s, int h) {
        auto it = memo.find({s, h});
        if (it != memo.end()) return it->second != 0;
        const auto& sc = schild[s];
        const auto& hc = hchild[h];
        bool ok = false;
        if (sc.empty()) {
            ok = true;
        } else if (sc.size() <= hc.size()) {
            // match each sub-child to a distinct host-child
            std::vector<int> match(hc.size(), -1);
            ok = true;
            for (size_t i = 0; i < sc.size() && ok; ++i) {
                std::vector<char> used(hc.size(), 0);
                ok = augment(sc, hc, static_cast<int>(i), match, used);
            }
        }
        memo[{s, h}] = ok ? 1 : 0;
        return ok;
    }

    bool augment(const std::vector<int>& sc, const std::vector<int>& hc, int i,
                 std::vector<int>& match, std::vector<char>& used) {
        for (size_t j = 0; j < hc.size(); ++j) {
            if (used[j] || !embeds(sc[i], hc[j])) continue;
            used[j] = 1;
            if (match[j] < 0 || augment(sc, hc, match[j], match, used)) {
                match[j] = i;
                return true;
            }
        }
        return false;
    }
};

} // namespace

bool rooted_embeds(const Tree& sub, const Tree& host) {
    if (!sub.root() || !host.root()) throw Error("rooted_embeds: both trees need roots");
    if (sub.vertex_count() > host.vertex_count()) return false;
    Embedder e(sub, host);
    return e.embeds(*sub.root(), *host.root());
}

std::pair<Tree, Tree> ls_switch(const LSSwitchSpec& spec) {
    const Tree& r = spec.core;
    if (spec.u < 0 || spec.u >= r.vertex_count() || spec.v < 0 || spec.v >= r.vertex_count())
        throw Error("ls_switch: marked vertex out of range");
    auto dist = bfs_distances(r.graph(), spec.u);
    if (dist[spec.v] % 2 != 0) throw Error("ls_switch: marked vertices at odd distance");
    int marks_uv[2] = {spec.u, spec.v};
    int marks_vu[2] = {spec.v, spec.u};
    if (canonical_code(r, marks_uv) != canonical_code(r, marks_vu))
        throw Error("ls_switch: core has no automorphism exchanging the marks");
    for (const Tree* a : {&spec.t1, &spec.t2, &spec.t3, &spec.t4})
        if (!a->root()) throw Error("ls_switch: attachments need roots");
    if (!rooted_embeds(spec.t2, spec.t1)) throw Error("ls_switch: t2 does not embed into t1");
    if (!rooted_embeds(spec.t4, spec.t3)) throw Error("ls_switch: t4 does not embed into t3");

    Tree t = glue_at(glue_at(glue_at(glue_at(r, spec.u, spec.t1), spec.u, spec.t4), spec.v, spec.t2),
                     spec.v, spec.t3);
    Tree tp = glue_at(glue_at(glue_at(glue_at(r, spec.u, spec.t1), spec.u, spec.t3), spec.v, spec.t2),
                      spec.v, spec.t4);
    return {t.with_root(spec.u), tp.with_root(spec.u)};
}

std::pair<Tree, Tree> short_path_shift(const Tree& branch) {
    if (!branch.root()) throw Error("short_path_shift: branch needs a root");
    int u = *branch.root();
    int nb = branch.vertex_count();
    auto edges = branch.graph().edges();
    auto end_edges = edges;
    end_edges.emplace_back(u, nb);
    end_edges.emplace_back(nb, nb + 1);
    auto mid_edges = edges;
    mid_edges.emplace_back(u, nb);
    mid_edges.emplace_back(u, nb + 1);
    return {Tree(Graph(nb + 2, end_edges), u), Tree(Graph(nb + 2, mid_edges), u)};
}

Tree claw_delete(const Tree& t) {
    const Graph& g = t.graph();
    int center = -1;
    std::vector<int> leaves;
    for (int v = 0; v < g.vertex_count() && center < 0; ++v) {
        std::vector<int> ls;
        for (int u : g.neighbors(v))
            if (g.degree(u) == 1) ls.push_back(u);
        if (ls.size() >= 3) {
            center = v;
            leaves.assign(ls.begin(), ls.begin() + 3);
        }
    }
    if (center < 0) throw Error("claw_delete: no vertex with three leaf neighbors");
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges()) {
        bool dropped = false;
        for (int l : leaves)
            if ((a == center && b == l) || (b == center && a == l)) dropped = true;
        if (!dropped) edges.emplace_back(a, b);
    }
    edges.emplace_back(center, leaves[0]);
    edges.emplace_back(leaves[0], leaves[1]);
    edges.emplace_back(leaves[1], leaves[2]);
    return Tree(Graph(g.vertex_count(), edges));
}

Tree leaf_move(const Tree& t, int u, int v) {
    const Graph& g = t.graph();
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() || u == v)
        throw Error("leaf_move: bad vertices");
    if (g.degree(u) != 1) throw Error("leaf_move: u is not a leaf");
    int small = t.small_class(); // throws on tied classes
    if (t.color(u) == small) throw Error("leaf_move: u is not in the large class");
    if (t.color(v) != small) throw Error("leaf_move: v is not in the small class");
    int x = g.neighbors(u)[0];
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges())
        if (!((a == u && b == x) || (a == x && b == u))) edges.emplace_back(a, b);
    edges.emplace_back(u, v);
    return Tree(Graph(g.vertex_count(), edges));
}

} // namespace treehom
