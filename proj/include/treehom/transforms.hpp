#pragma once

#include <utility>
#include <vector>

#include "treehom/graph.hpp"

namespace treehom {

// A KC move on a tree: an ordered endpoint pair (x, y) whose connecting path
// has every interior vertex of degree two. Applying it moves all off-path
// neighbors of y to x. A move is trivial (result isomorphic to the input)
// iff one endpoint has no off-path neighbors, i.e. is a leaf.
struct KCMove {
    int x = -1;
    int y = -1;
    std::vector<int> path; // x ... y inclusive
    bool odd = false;      // path length (edge count) odd
    bool trivial = false;
};

std::vector<KCMove> enumerate_kc_moves(const Tree& t);
Tree kc_apply(const Tree& t, const KCMove& move);

// Attach a rooted tree at a vertex of the base: the attachment's root is
// identified with `at`, its other vertices get fresh ids after the base's.
Tree glue_at(const Tree& base, int at, const Tree& attach);

// True iff `sub` embeds into `host` as a rooted subtree (injective,
// edge-preserving, root to root). Both must carry roots.
bool rooted_embeds(const Tree& sub, const Tree& host);

// Core tree with two swap-symmetric marked vertices at even distance, plus
// two nested pairs of rooted attachments (t2 embeds into t1, t4 into t3).
struct LSSwitchSpec {
    Tree core;
    int u;
    int v;
    Tree t1, t2, t3, t4; // rooted
};

// Assembles T = core + {t1,t4}@u + {t2,t3}@v and T' = core + {t1,t3}@u +
// {t2,t4}@v, validating the arguments first. Both results are rooted at u.
std::pair<Tree, Tree> ls_switch(const LSSwitchSpec& spec);

// From a rooted branch B(u), builds T = B glued onto an end vertex of a
// 3-vertex path and T' = B glued onto its middle vertex. Both rooted at u.
std::pair<Tree, Tree> short_path_shift(const Tree& branch);

// Replace three leaves hanging at a common vertex by a pendant path of
// length 3 at that vertex. Deterministic choice: smallest-index center,
// smallest-index leaves. Throws if no vertex has three leaf neighbors.
Tree claw_delete(const Tree& t);

// Delete leaf u (in the large color class) and attach a new leaf with the
// same id to v (in the small class). Color class sizes are unchanged.
Tree leaf_move(const Tree& t, int u, int v);

} // namespace treehom
