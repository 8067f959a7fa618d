#include <doctest.h>

#include <random>

#include "treehom/canonical.hpp"
#include "treehom/enumerate.hpp"
#include "treehom/homcount.hpp"
#include "treehom/transforms.hpp"

using namespace treehom;

namespace {

KCMove find_move(const Tree& t, int x, int y) {
    for (const KCMove& m : enumerate_kc_moves(t))
        if (m.x == x && m.y == y) return m;
    FAIL("move not found");
    return {};
}

} // namespace

TEST_CASE("move enumeration on paths and stars") {
    Tree p5 = make_path(5);
    auto moves = enumerate_kc_moves(p5);
    // every ordered pair qualifies on a path
    CHECK(moves.size() == 5 * 4);
    for (const KCMove& m : moves) {
        bool end = m.x == 0 || m.x == 4 || m.y == 0 || m.y == 4;
        CHECK(m.trivial == end);
        CHECK(m.odd == ((m.path.size() - 1) % 2 == 1));
    }
    for (const KCMove& m : enumerate_kc_moves(make_star(6))) CHECK(m.trivial);
}

TEST_CASE("kc apply on the five-vertex path") {
    Tree p5 = make_path(5);
    // 1-based (2,4) is 0-based (1,3)
    Tree moved = kc_apply(p5, find_move(p5, 1, 3));
    CHECK(is_isomorphic(moved, make_spider(1, 1, 2)));
    // trivial moves keep the isomorphism class
    Tree same = kc_apply(p5, find_move(p5, 0, 3));
    CHECK(is_isomorphic(same, p5));
    CHECK_THROWS_AS(kc_apply(make_star(5), find_move(p5, 1, 3)), Error);
}

TEST_CASE("a maximal chain of nontrivial moves ends at the star") {
    Tree t = make_path(6);
    for (int guard = 0; guard < 10; ++guard) {
        bool applied = false;
        for (const KCMove& m : enumerate_kc_moves(t)) {
            if (m.trivial) continue;
            t = kc_apply(t, m);
            applied = true;
            break;
        }
        if (!applied) break;
    }
    CHECK(is_isomorphic(t, make_star(6)));
}

TEST_CASE("kc is symmetric in its endpoints and adds one leaf") {
    for (int n = 2; n <= 8; ++n) {
        for (const Tree& t : trees_of_order(n)) {
            for (const KCMove& m : enumerate_kc_moves(t)) {
                Tree a = kc_apply(t, m);
                Tree b = kc_apply(t, find_move(t, m.y, m.x));
                CHECK(canonical_code(a) == canonical_code(b));
                if (m.trivial)
                    CHECK(is_isomorphic(a, t));
                else
                    CHECK(leaf_count(a.graph()) == leaf_count(t.graph()) + 1);
            }
        }
    }
}

TEST_CASE("the six-vertex odd-move witness exists") {
    Tree y = make_spider(1, 1, 3);
    bool found = false;
    for (const KCMove& m : enumerate_kc_moves(y)) {
        if (m.trivial || !m.odd) continue;
        Tree moved = kc_apply(y, m);
        if (moved.class_sizes() == std::pair<int, int>(3, 3)) found = true;
    }
    CHECK(found);
}

TEST_CASE("rooted embedding") {
    Tree p3_end = make_path(3).with_root(0);
    Tree p3_mid = make_path(3).with_root(1);
    Tree s4 = make_star(4).with_root(0);
    Tree k1 = Tree(Graph(1, {}), 0);
    CHECK(rooted_embeds(k1, p3_end));
    CHECK(rooted_embeds(p3_end, make_path(5).with_root(0)));
    CHECK(!rooted_embeds(make_path(5).with_root(0), p3_end));
    CHECK(rooted_embeds(p3_mid, s4));
    CHECK(!rooted_embeds(s4, p3_mid));
    CHECK(!rooted_embeds(p3_end, s4)); // needs depth 2, star has depth 1
    CHECK_THROWS_AS(rooted_embeds(make_path(2), s4), Error);
}

TEST_CASE("ls switch validation") {
    Tree k1 = Tree(Graph(1, {}), 0);
    Tree p2 = make_path(2).with_root(0);
    // odd distance between the marks
    CHECK_THROWS_AS(ls_switch({make_path(2), 0, 1, p2, k1, p2, k1}), Error);
    // no swap automorphism: an end and the middle of a path
    CHECK_THROWS_AS(ls_switch({make_path(3), 0, 1, p2, k1, p2, k1}), Error);
    // bad embedding witness: t2 does not embed into t1
    CHECK_THROWS_AS(ls_switch({make_path(3), 0, 2, k1, p2, p2, k1}), Error);
    // missing root
    CHECK_THROWS_AS(ls_switch({make_path(3), 0, 2, make_path(2), k1, p2, k1}), Error);
}

TEST_CASE("ls switch realizes the even KC move") {
    // core an even path, second and fourth attachments trivial
    Tree core = make_path(3);
    Tree t1 = make_path(2).with_root(0);
    Tree t3 = make_star(3).with_root(0);
    Tree k1 = Tree(Graph(1, {}), 0);
    auto [before, after] = ls_switch({core, 0, 2, t1, k1, t3, k1});
    CHECK(before.vertex_count() == 3 + 1 + 2);
    CHECK(after.vertex_count() == before.vertex_count());
    // the switch is the KC move along the core path
    KCMove kc;
    for (const KCMove& m : enumerate_kc_moves(before))
        if (m.x == 0 && m.y == 2) kc = m;
    CHECK(is_isomorphic(after, kc_apply(before, kc)));
    CHECK(before.class_sizes() == after.class_sizes());
    // monotone for every small source tree
    for (int m = 1; m <= 6; ++m)
        for (const Tree& h : trees_of_order(m))
            CHECK(hom_count(h, after.graph()) >= hom_count(h, before.graph()));
}

TEST_CASE("symmetric ls switch specs give isomorphic results") {
    // equal nested pairs: the switch is a no-op up to isomorphism
    Tree core = make_path(3);
    Tree t1 = make_path(3).with_root(1);
    Tree t3 = make_path(2).with_root(0);
    auto [before, after] = ls_switch({core, 0, 2, t1, t1, t3, t3});
    CHECK(is_isomorphic(before, after));
}

TEST_CASE("kelmans case decreases the wiener index") {
    // core: attach a branch to the middle of a 3-vertex path, marks at the ends
    Tree core = make_star(4); // middle of P_3 with one extra pendant
    Tree t1 = make_path(3).with_root(0);
    Tree k1 = Tree(Graph(1, {}), 0);
    auto [before, after] = ls_switch({core, 1, 2, t1, k1, make_path(2).with_root(0), k1});
    REQUIRE(!is_isomorphic(before, after));
    CHECK(wiener_index(after.graph()) < wiener_index(before.graph()));
}

TEST_CASE("wiener index drops strictly under nontrivial switches and shifts") {
    // short-path shift over all rooted branches up to 7 vertices
    for (int m = 1; m <= 7; ++m) {
        for (const Tree& b : trees_of_order(m)) {
            for (int u = 0; u < m; ++u) {
                auto [t, tp] = short_path_shift(b.with_root(u));
                if (is_isomorphic(t, tp)) continue;
                CHECK(wiener_index(tp.graph()) < wiener_index(t.graph()));
            }
        }
    }
    // ls-switch instances assembled up to 9 vertices
    Tree k1 = Tree(Graph(1, {}), 0);
    std::vector<Tree> attach{k1, make_path(2).with_root(0), make_path(3).with_root(0),
                             make_path(3).with_root(1)};
    for (int nr = 2; nr <= 5; ++nr) {
        for (const Tree& core : trees_of_order(nr)) {
            for (int u = 0; u < nr; ++u) {
                auto dist = bfs_distances(core.graph(), u);
                for (int v = 0; v < nr; ++v) {
                    if (u == v || dist[v] % 2 != 0) continue;
                    int uv[2] = {u, v}, vu[2] = {v, u};
                    if (canonical_code(core, uv) != canonical_code(core, vu)) continue;
                    for (const Tree& t1 : attach)
                        for (const Tree& t3 : attach) {
                            if (!rooted_embeds(k1, t1) || !rooted_embeds(k1, t3)) continue;
                            LSSwitchSpec spec{core, u, v, t1, k1, t3, k1};
                            auto [before, after] = ls_switch(spec);
                            if (before.vertex_count() > 9) continue;
                            if (is_isomorphic(before, after)) continue;
                            CHECK(wiener_index(after.graph()) <
                                  wiener_index(before.graph()));
                        }
                }
            }
        }
    }
}

TEST_CASE("short path shift transfers the hom-vector") {
    std::mt19937 rng(9);
    for (int rep = 0; rep < 40; ++rep) {
        int m = 1 + static_cast<int>(rng() % 6);
        const auto& ts = trees_of_order(m);
        const Tree& b = ts[rng() % ts.size()];
        int u = static_cast<int>(rng() % m);
        auto [t, tp] = short_path_shift(b.with_root(u));
        for (int n : {5, 7}) {
            Graph pn = make_path(n).graph();
            HomVector a = hom_vector(b, u, pn);
            HomVector end2 = adjacency_apply(pn, adjacency_apply(pn, all_ones(n)));
            HomVector leg = adjacency_apply(pn, all_ones(n));
            CHECK(hom_vector(t, u, pn).entries == hadamard(a, end2).entries);
            CHECK(hom_vector(tp, u, pn).entries ==
                  hadamard(a, hadamard(leg, leg)).entries);
            // g difference via the alternating sums
            Int diff = 0;
            for (int i = 3; i <= n - 2; i += 2)
                diff += a.entries[1] * a.entries[i - 1] - a.entries[0] * a.entries[i];
            CHECK(g_product(tp, make_path(n)) ==
                  g_product(t, make_path(n)) + 8 * diff);
            CHECK(diff >= 0);
        }
        // n = 3: both variants carry g = 2^|T|
        CHECK(g_product(tp, make_path(3)) == g_product(t, make_path(3)));
        CHECK(g_product(t, make_path(3)) ==
              int_pow(2ul, static_cast<unsigned long>(t.vertex_count())));
    }
}

TEST_CASE("claw deletion") {
    Tree s4 = make_star(4);
    CHECK(is_isomorphic(claw_delete(s4), make_path(4)));
    CHECK(claw_delete(s4).vertex_count() == 4);
    CHECK_THROWS_AS(claw_delete(make_path(6)), Error);
}

TEST_CASE("claw deletion shifts the even-index count by 4a2") {
    std::mt19937 rng(13);
    int done = 0;
    while (done < 40) {
        int m = 5 + static_cast<int>(rng() % 5); // 5..9 vertices
        const auto& ts = trees_of_order(m);
        const Tree& t = ts[rng() % ts.size()];
        // locate a claw center
        int center = -1;
        for (int v = 0; v < m && center < 0; ++v) {
            int leaves = 0;
            for (int u : t.neighbors(v)) leaves += t.degree(u) == 1;
            if (leaves >= 3) center = v;
        }
        if (center < 0) continue;
        ++done;
        Tree after = claw_delete(t);
        // residual tree at the center: drop the three smallest leaf neighbors
        std::vector<int> keep;
        int dropped = 0;
        for (int v = 0; v < m; ++v) {
            bool is_claw_leaf = t.degree(v) == 1 && t.graph().has_edge(center, v);
            if (is_claw_leaf && dropped < 3) {
                ++dropped;
                continue;
            }
            keep.push_back(v);
        }
        std::vector<int> remap(m, -1);
        for (size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> edges;
        for (auto [x, y] : t.graph().edges())
            if (remap[x] >= 0 && remap[y] >= 0) edges.emplace_back(remap[x], remap[y]);
        Tree residual(Graph(static_cast<int>(keep.size()), edges));
        for (int n : {5, 7}) {
            Graph pn = make_path(n).graph();
            HomVector a = hom_vector(residual, remap[center], pn);
            auto even_sum = [&](const Tree& tree, int root) {
                Int s = 0;
                HomVector h = hom_vector(tree, root, pn);
                for (int i = 1; i < n; i += 2) s += h.entries[i];
                return s;
            };
            CHECK(even_sum(t, center) == even_sum(after, center) + 4 * a.entries[1]);
        }
    }
}

TEST_CASE("leaf move keeps class sizes and the even-index count") {
    std::mt19937 rng(19);
    int done = 0;
    while (done < 100) {
        int m = 3 + 2 * static_cast<int>(rng() % 4); // odd sizes 3..9
        const auto& ts = trees_of_order(m);
        const Tree& t = ts[rng() % ts.size()];
        int small = t.small_class();
        std::vector<int> large_leaves, small_vertices;
        for (int v = 0; v < m; ++v) {
            if (t.color(v) != small && t.degree(v) == 1) large_leaves.push_back(v);
            if (t.color(v) == small) small_vertices.push_back(v);
        }
        if (large_leaves.empty() || small_vertices.empty()) continue;
        int u = large_leaves[rng() % large_leaves.size()];
        int v = small_vertices[rng() % small_vertices.size()];
        ++done;
        Tree moved = leaf_move(t, u, v);
        CHECK(moved.class_sizes() == t.class_sizes());
        for (int n : {5, 7}) {
            auto even_sum = [&](const Tree& tree) {
                int sc = tree.small_class();
                int w = 0;
                while (tree.color(w) != sc) ++w;
                return hom_parity_split(tree, w, n).first;
            };
            CHECK(even_sum(t) == even_sum(moved));
        }
    }
    // error paths
    Tree y = make_spider(1, 1, 2); // 5 vertices, small class holds the center
    int small = y.small_class();
    int small_leaf = -1, large_leaf = -1, small_vertex = -1;
    for (int v = 0; v < 5; ++v) {
        if (y.degree(v) == 1 && y.color(v) == small) small_leaf = v;
        if (y.degree(v) == 1 && y.color(v) != small) large_leaf = v;
        if (y.degree(v) > 1 && y.color(v) == small) small_vertex = v;
    }
    REQUIRE(large_leaf >= 0);
    REQUIRE(small_vertex >= 0);
    if (small_leaf >= 0) CHECK_THROWS_AS(leaf_move(y, small_leaf, small_vertex), Error);
    CHECK_THROWS_AS(leaf_move(y, small_vertex, small_vertex), Error);
}

TEST_CASE("kc monotonicity sweeps at unit scale") {
    // walks: hom(P_m, moved) >= hom(P_m, t) for m <= 10, trees <= 9
    for (int n = 2; n <= 9; ++n) {
        for (const Tree& t : trees_of_order(n)) {
            auto moves = enumerate_kc_moves(t);
            std::vector<Int> before;
            for (int m = 1; m <= 10; ++m)
                before.push_back(hom_count(make_path(m), t.graph()));
            for (const KCMove& mv : moves) {
                if (mv.trivial) continue;
                Tree moved = kc_apply(t, mv);
                for (int m = 1; m <= 10; ++m)
                    CHECK(hom_count(make_path(m), moved.graph()) >= before[m - 1]);
            }
        }
    }
}
