#include "treehom/homcount.hpp"

#include <algorithm>
#include <cmath>

namespace treehom {

Int HomVector::norm() const {
    Int s = 0;
    for (const Int& e : entries) s += e;
    return s;
}

HomVector all_ones(int n) {
    HomVector v;
    v.entries.assign(n, Int(1));
    return v;
}

HomVector hadamard(const HomVector& a, const HomVector& b) {
    if (a.target_size() != b.target_size()) throw Error("hom-vector length mismatch");
    HomVector out;
    out.entries.resize(a.entries.size());
    for (size_t i = 0; i < a.entries.size(); ++i) out.entries[i] = a.entries[i] * b.entries[i];
    return out;
}

HomVector adjacency_apply(const Graph& g, const HomVector& v) {
    if (v.target_size() != g.vertex_count()) throw Error("hom-vector length mismatch");
    HomVector out;
    out.entries.assign(g.vertex_count(), Int(0));
    for (int i = 0; i < g.vertex_count(); ++i) {
        Int& s = out.entries[i];
        for (int j : g.neighbors(i)) s += v.entries[j];
    }
    return out;
}

HomVector hom_vector(const Tree& t, int root, const Graph& g) {
    int nt = t.vertex_count();
    if (root < 0 || root >= nt) throw Error("invalid root");
    if (g.vertex_count() == 0) throw Error("empty target graph");
    // Iterative post-order; intermediate vectors freed as soon as merged.
    std::vector<int> parent(nt, -1), order;
    order.reserve(nt);
    std::vector<int> stack{root};
    std::vector<char> seen(nt, 0);
    seen[root] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        order.push_back(u);
        for (int v : t.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                parent[v] = u;
                stack.push_back(v);
            }
    }
    std::vector<HomVector> vec(nt);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int u = *it;
        HomVector acc;
        bool have = false;
        for (int c : t.neighbors(u)) {
            if (c == parent[u]) continue;
            HomVector lifted = adjacency_apply(g, vec[c]);
            vec[c].entries.clear();
            vec[c].entries.shrink_to_fit();
            acc = have ? hadamard(acc, lifted) : std::move(lifted);
            have = true;
        }
        vec[u] = have ? std::move(acc) : all_ones(g.vertex_count());
    }
    return std::move(vec[root]);
}

Int hom_count(const Tree& t, const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    return hom_vector(t, 0, g).norm();
}

Int hom_brute_force(const Graph& h, const Graph& g, double map_budget) {
    int nh = h.vertex_count(), ng = g.vertex_count();
    if (nh == 0) return 1;
    if (ng == 0) return 0;
    if (std::pow(static_cast<double>(ng), static_cast<double>(nh)) > map_budget)
        throw BudgetError("brute-force map space exceeds budget");
    // Backtracking over vertices 0..nh-1; each partial assignment is checked
    // against already-assigned neighbors, so exactly the homomorphisms are
    // counted.
    std::vector<std::vector<int>> back_edges(nh);
    for (auto [u, v] : h.edges()) {
        back_edges[std::max(u, v)].push_back(std::min(u, v));
    }
    std::vector<int> img(nh, -1);
    Int count = 0;
    int level = 0;
    img[0] = -1;
    while (level >= 0) {
        int next = ++img[level];
        if (next >= ng) {
            img[level] = -1;
            --level;
            continue;
        }
        bool ok = true;
        for (int w : back_edges[level])
            if (!g.has_edge(img[w], next)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        if (level == nh - 1) {
            ++count;
        } else {
            ++level;
        }
    }
    return count;
}

Int hom_cycle(int m, const Graph& g) {
    if (m < 3) throw Error("cycle length must be at least 3");
    int n = g.vertex_count();
    Int total = 0;
    HomVector v;
    for (int i = 0; i < n; ++i) {
        v.entries.assign(n, Int(0));
        v.entries[i] = 1;
        for (int step = 0; step < m; ++step) v = adjacency_apply(g, v);
        total += v.entries[i];
    }
    return total;
}

std::pair<Int, Int> hom_parity_split(const Tree& t, int u, int n) {
    if (n < 3 || n % 2 == 0) throw Error("parity split needs odd n >= 3");
    if (u < 0 || u >= t.vertex_count()) throw Error("invalid root");
    HomVector h = hom_vector(t, u, make_path(n).graph());
    Int even = 0, odd = 0;
    for (int i = 0; i < n; ++i) {
        // entry i corresponds to 1-based path vertex i+1
        if ((i + 1) % 2 == 0)
            even += h.entries[i];
        else
            odd += h.entries[i];
    }
    return {even, odd};
}

Int g_product(const Tree& t1, const Tree& t2) {
    HomVector h = hom_vector(t1, 0, t2.graph());
    Int ha = 0, hb = 0;
    for (int i = 0; i < t2.vertex_count(); ++i) {
        if (t2.color(i) == 0)
            ha += h.entries[i];
        else
            hb += h.entries[i];
    }
    return ha * hb;
}

// ---- closed forms ----------------------------------------------------------

Int end_star(int n) {
    if (n < 2) throw Error("end_star needs n >= 2");
    return int_pow(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(n - 1)) + (n - 1);
}

Int star_to_path(int m, int n) {
    if (m < 1 || n < 2) throw Error("star_to_path needs m >= 1, n >= 2");
    return Int(n - 2) * int_pow(2ul, static_cast<unsigned long>(m - 1)) + 2;
}

Int tree_to_star(const Tree& t, int n) {
    if (n < 2) throw Error("tree_to_star needs n >= 2");
    return int_pow(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(t.class_size(0))) +
           int_pow(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(t.class_size(1)));
}

Int doublestar_to_star(int k) {
    if (k < 2) throw Error("doublestar_to_star needs k >= 2");
    return 2 * int_pow(static_cast<unsigned long>(2 * k - 1), static_cast<unsigned long>(k));
}

Int star_to_graph(int m, const Graph& g) {
    if (m < 1) throw Error("star_to_graph needs m >= 1");
    if (m == 1) return g.vertex_count();
    Int s = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        s += int_pow(static_cast<unsigned long>(g.degree(v)), static_cast<unsigned long>(m - 1));
    return s;
}

Int closed_form(const std::string& kind, const std::vector<long>& params) {
    auto need = [&](size_t k) {
        if (params.size() != k) throw Error("closed_form '" + kind + "': wrong parameter count");
    };
    if (kind == "end-star") {
        need(1);
        return end_star(static_cast<int>(params[0]));
    }
    if (kind == "star-to-path") {
        need(2);
        return star_to_path(static_cast<int>(params[0]), static_cast<int>(params[1]));
    }
    if (kind == "two-class-to-star") {
        need(3); // |A|, |B|, n
        long a = params[0], b = params[1], n = params[2];
        if (a < 0 || b < 0 || n < 2) throw Error("two-class-to-star: bad parameters");
        return int_pow(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(a)) +
               int_pow(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(b));
    }
    if (kind == "doublestar-to-star") {
        need(1);
        return doublestar_to_star(static_cast<int>(params[0]));
    }
    throw Error("unknown closed form '" + kind + "'");
}

// ---- dominance order and shape predicates -----------------------------------

VectorOrder dominance_compare(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.size() != b.size()) throw Error("dominance_compare: length mismatch");
    if (!is_symmetric(a) || !is_symmetric(b)) throw Error("dominance_compare: non-symmetric input");
    int n = static_cast<int>(a.size());
    bool le = true, ge = true;
    Int sa = 0, sb = 0;
    // windows shrink from the full sum; accumulate from the middle outward
    std::vector<Int> wa, wb;
    for (int k = (n + 1) / 2; k >= 1; --k) {
        // window k covers 1-based positions k .. n+1-k
        int lo = k - 1, hi = n - k;
        if (lo == hi) {
            sa += a[lo];
            sb += b[lo];
        } else {
            sa += a[lo] + a[hi];
            sb += b[lo] + b[hi];
        }
        wa.push_back(sa);
        wb.push_back(sb);
    }
    for (size_t i = 0; i < wa.size(); ++i) {
        if (wa[i] > wb[i]) le = false;
        if (wa[i] < wb[i]) ge = false;
    }
    if (le && ge) return VectorOrder::Equal;
    if (le) return VectorOrder::LessEqual;
    if (ge) return VectorOrder::GreaterEqual;
    return VectorOrder::Incomparable;
}

bool is_symmetric(const std::vector<Int>& a) {
    int n = static_cast<int>(a.size());
    for (int i = 0; i < n / 2; ++i)
        if (a[i] != a[n - 1 - i]) return false;
    return true;
}

bool is_unimodal(const std::vector<Int>& a) {
    size_t i = 0;
    while (i + 1 < a.size() && a[i] <= a[i + 1]) ++i;
    while (i + 1 < a.size() && a[i] >= a[i + 1]) ++i;
    return i + 1 >= a.size();
}

bool is_symmetric_unimodal(const std::vector<Int>& a) {
    return is_symmetric(a) && is_unimodal(a);
}

bool is_symmetric_bi_unimodal(const std::vector<Int>& a) {
    if (!is_symmetric(a)) return false;
    std::vector<Int> odd, even; // 1-based index parity
    for (size_t i = 0; i < a.size(); ++i) {
        if (i % 2 == 0)
            odd.push_back(a[i]);
        else
            even.push_back(a[i]);
    }
    return is_unimodal(odd) && is_unimodal(even);
}

bool is_log_concave_alternating(const std::vector<Int>& a) {
    int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if ((j - i) % 2 == 0) continue; // same parity
            if (a[i] * a[j] > a[i + 1] * a[j - 1]) return false;
        }
    return true;
}

bool correlation_pair_holds(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.size() != b.size()) throw Error("correlation pair: length mismatch");
    int n = static_cast<int>(a.size());
    double center = (n + 1) / 2.0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if ((i - j) % 2 != 0) continue;
            if (std::abs(center - i) > std::abs(center - j)) continue;
            if (a[i - 1] * b[j - 1] < a[j - 1] * b[i - 1]) return false;
        }
    return true;
}

} // namespace treehom
