#include "ecl/tashkinov.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ecl/rng.hpp"

namespace ecl {

ColorSet tree_used_colors(const EdgeColoring& c, std::span<const int> tree_edges) {
    ColorSet s;
    for (int e : tree_edges)
        if (c.colored(e)) s.set(c.color(e));
    return s;
}

ElementaryReport verify_elementary(const EdgeColoring& c, std::span<const int> vertices) {
    ElementaryReport r;
    std::vector<int> owner(c.k(), -1);
    for (int v : vertices) {
        ColorSet miss = c.missing(v);
        for (int col = 0; col < c.k(); ++col) {
            if (!miss.test(col)) continue;
            if (owner[col] != -1) {
                r.elementary = false;
                r.vertex_a = owner[col];
                r.vertex_b = v;
                r.shared_color = col;
                return r;
            }
            owner[col] = v;
        }
    }
    return r;
}

ClosureReport closure_report(const EdgeColoring& c, std::span<const int> vertices,
                             const std::optional<ColorSet>& b) {
    ClosureReport r;
    ColorSet miss = c.missing_union(vertices);
    auto bnd = boundary(c.graph(), vertices);
    std::vector<int> color_count(c.k(), 0);
    for (const auto& be : bnd) {
        if (!c.colored(be.edge)) continue;
        int col = c.color(be.edge);
        if (miss.test(col) && r.closed) {
            r.closed = false;
            r.violating_edge = be.edge;
        }
        if (++color_count[col] > 1 && r.repeated_color == -1) r.repeated_color = col;
    }
    r.strongly_closed = r.closed && r.repeated_color == -1;
    if (b) {
        r.b_closed = is_b_closed(c, vertices, *b);
        r.b_minus_closed = is_b_minus_closed(c, vertices, *b);
    }
    return r;
}

namespace {

void check_k_triple_coloring(const Multigraph& g, const EdgeColoring& c, int e) {
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("bad edge id");
    if (c.colored(e)) throw std::invalid_argument("k-triple edge must be uncolored");
    GraphStats s = stats(g);
    if (c.k() < s.max_degree + 1) throw std::invalid_argument("k-triple needs k >= Delta+1");
    for (int f = 0; f < g.edge_count(); ++f)
        if (f != e && !c.colored(f))
            throw std::invalid_argument("k-triple coloring must color all of G-e");
    if (!validate_proper(c).ok) throw std::invalid_argument("k-triple coloring is not proper");
}

} // namespace

void extend_taa(const Multigraph& g, const EdgeColoring& c, TreeSeq& tree, uint64_t seed) {
    std::vector<int> priority(g.edge_count());
    std::iota(priority.begin(), priority.end(), 0);
    if (seed != 0) {
        Rng rng(seed);
        rng.shuffle(priority);
    }
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : tree.vertices) in[v] = 1;
    while (true) {
        ColorSet miss = c.missing_union(tree.vertices);
        int best = -1;
        for (int v : tree.vertices) {
            for (int f : g.incident_edges(v)) {
                int w = g.other_end(f, v);
                if (in[w]) continue;
                if (!c.colored(f) || !miss.test(c.color(f))) continue;
                if (best == -1 || priority[f] < priority[best]) best = f;
            }
        }
        if (best == -1) return;
        auto [u, w] = g.endpoints(best);
        int outside = in[u] ? w : u;
        tree.edges.push_back(best);
        tree.vertices.push_back(outside);
        in[outside] = 1;
    }
}

TreeSeq build_maximal_tashkinov(const Multigraph& g, const EdgeColoring& c, int e,
                                uint64_t seed) {
    check_k_triple_coloring(g, c, e);
    auto [y0, y1] = g.endpoints(e);
    TreeSeq tree;
    tree.vertices = {y0, y1};
    tree.edges = {e};
    extend_taa(g, c, tree, seed);
    return tree;
}

int scheide_tree_bound(int k, int delta) { return std::max(2 * (k - delta) + 1, 11); }

} // namespace ecl
