#include "treehom/canonical.hpp"

#include <algorithm>

namespace treehom {

namespace {

// AHU-style encoding of the subtree hanging at `root`, entered from `from`
// (pass -1 at the top). Children codes are sorted, so the result is
// label-invariant. Marked vertices contribute a tag character right after
// the opening paren.
Code encode_rooted(const Graph& g, int root, int from, const std::vector<char>& tag) {
    // Explicit stack; target trees can be deep paths.
    struct Frame {
        int v = -1;
        int from = -1;
        size_t next = 0;
        std::vector<Code> child_codes = {};
    };
    std::vector<Frame> stack;
    stack.push_back({root, from});
    Code result;
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& nb = g.neighbors(f.v);
        if (f.next < nb.size()) {
            int u = nb[f.next++];
            if (u != f.from) stack.push_back({u, f.v});
            continue;
        }
        std::sort(f.child_codes.begin(), f.child_codes.end());
        Code code;
        code.reserve(3 + 4 * f.child_codes.size());
        code.push_back('(');
        code.push_back(static_cast<char>('0' + tag[f.v]));
        for (const Code& c : f.child_codes) code += c;
        code.push_back(')');
        stack.pop_back();
        if (stack.empty())
            result = std::move(code);
        else
            stack.back().child_codes.push_back(std::move(code));
    }
    return result;
}

// One or two adjacent centroids of a tree.
std::vector<int> centroids(const Graph& g) {
    int n = g.vertex_count();
    if (n == 1) return {0};
    std::vector<int> size(n, 1), order, parent(n, -1);
    order.reserve(n);
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        order.push_back(u);
        for (int v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                parent[v] = u;
                stack.push_back(v);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];
    std::vector<int> cents;
    int best = n + 1;
    for (int v = 0; v < n; ++v) {
        int heaviest = n - size[v]; // component through the parent
        for (int u : g.neighbors(v))
            if (u != parent[v]) heaviest = std::max(heaviest, size[u]);
            // children sizes; parent side handled above
        if (heaviest < best) {
            best = heaviest;
            cents = {v};
        } else if (heaviest == best) {
            cents.push_back(v);
        }
    }
    return cents;
}

} // namespace

Code canonical_code(const Tree& t, std::span<const int> marks) {
    const Graph& g = t.graph();
    if (marks.size() > 2) throw Error("at most two marks supported");
    std::vector<char> tag(g.vertex_count(), 0);
    for (size_t k = 0; k < marks.size(); ++k) {
        int v = marks[k];
        if (v < 0 || v >= g.vertex_count()) throw Error("mark out of range");
        tag[v] = static_cast<char>(tag[v] | (1 << k));
    }
    auto cents = centroids(g);
    if (cents.size() == 1) return "T" + encode_rooted(g, cents[0], -1, tag);
    // Bicentroidal: the centroid edge is canonical; take the smaller of the
    // two orientations.
    Code a = encode_rooted(g, cents[0], cents[1], tag);
    Code b = encode_rooted(g, cents[1], cents[0], tag);
    return "D" + std::min(a + b, b + a);
}

std::string code_hex(const Code& c) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(c.size() * 2);
    for (unsigned char ch : c) {
        out.push_back(digits[ch >> 4]);
        out.push_back(digits[ch & 0xf]);
    }
    return out;
}

bool is_isomorphic(const Tree& a, const Tree& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

} // namespace treehom
