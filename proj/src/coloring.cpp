#include "ecl/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ecl {

EdgeColoring::EdgeColoring(const Multigraph& g, int k)
    : g_(std::make_shared<const Multigraph>(g)), k_(k) {
    if (k < 1 || k > kMaxColors) throw std::invalid_argument("k out of range");
    color_.assign(g.edge_count(), kUncolored);
    present_.assign(g.vertex_count(), ColorSet{});
}

void EdgeColoring::set(int edge, int c) {
    if (c < 0 || c >= k_) throw std::invalid_argument("color out of range");
    if (color_[edge] != kUncolored) unset(edge);
    auto [u, v] = g_->endpoints(edge);
    assert(!present_[u].test(c) && !present_[v].test(c));
    color_[edge] = c;
    present_[u].set(c);
    present_[v].set(c);
}

void EdgeColoring::unset(int edge) {
    int c = color_[edge];
    if (c == kUncolored) return;
    auto [u, v] = g_->endpoints(edge);
    color_[edge] = kUncolored;
    present_[u].reset(c);
    present_[v].reset(c);
}

void EdgeColoring::force_set(int edge, int c) {
    if (c < 0 || c >= k_) throw std::invalid_argument("color out of range");
    color_[edge] = c;
    for (auto& s : present_) s.reset();
    for (int e = 0; e < g_->edge_count(); ++e) {
        if (color_[e] == kUncolored) continue;
        auto [u, v] = g_->endpoints(e);
        present_[u].set(color_[e]);
        present_[v].set(color_[e]);
    }
}

ColorSet EdgeColoring::missing_union(std::span<const int> vertices) const {
    ColorSet s;
    for (int v : vertices) s |= missing(v);
    return s;
}

ColorSet EdgeColoring::present_union(std::span<const int> vertices) const {
    ColorSet s;
    for (int v : vertices) s |= present_[v];
    return s;
}

std::string ProperReport::describe() const {
    if (ok) return "proper";
    return "conflict at vertex " + std::to_string(conflict_vertex) + " between edges " +
           std::to_string(conflict_edge_a) + " and " + std::to_string(conflict_edge_b);
}

ProperReport validate_proper(const EdgeColoring& c) {
    const Multigraph& g = c.graph();
    ProperReport r;
    std::vector<ColorSet> recomputed(g.vertex_count());
    for (int v = 0; v < g.vertex_count() && r.ok; ++v) {
        std::vector<int> holder(c.k(), -1);
        for (int e : g.incident_edges(v)) {
            int col = c.color(e);
            if (col == kUncolored) continue;
            if (holder[col] != -1) {
                r.ok = false;
                r.conflict_vertex = v;
                r.conflict_edge_a = holder[col];
                r.conflict_edge_b = e;
                break;
            }
            holder[col] = e;
            recomputed[v].set(col);
        }
    }
    if (r.ok) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (recomputed[v] != c.present(v)) {
                r.cache_consistent = false;
                r.ok = false;
                r.conflict_vertex = v;
                break;
            }
    }
    return r;
}

namespace {

std::vector<char> membership(int n, std::span<const int> vertices) {
    std::vector<char> in(n, 0);
    for (int v : vertices) in[v] = 1;
    return in;
}

} // namespace

ColorSet colors_within(const EdgeColoring& c, std::span<const int> vertices) {
    const Multigraph& g = c.graph();
    auto in = membership(g.vertex_count(), vertices);
    ColorSet s;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (in[u] && in[v] && c.colored(e)) s.set(c.color(e));
    }
    return s;
}

ColorSet colors_on_boundary(const EdgeColoring& c, std::span<const int> vertices) {
    const Multigraph& g = c.graph();
    auto in = membership(g.vertex_count(), vertices);
    ColorSet s;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if ((in[u] != in[v]) && c.colored(e)) s.set(c.color(e));
    }
    return s;
}

ColorSet colors_incident(const EdgeColoring& c, std::span<const int> vertices) {
    const Multigraph& g = c.graph();
    auto in = membership(g.vertex_count(), vertices);
    ColorSet s;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if ((in[u] || in[v]) && c.colored(e)) s.set(c.color(e));
    }
    return s;
}

std::vector<BoundaryEdge> boundary(const Multigraph& g, std::span<const int> vertices) {
    if (vertices.empty()) throw std::invalid_argument("boundary of empty set");
    auto in = membership(g.vertex_count(), vertices);
    std::vector<BoundaryEdge> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (in[u] != in[v]) out.push_back({e, in[u] ? u : v, in[u] ? v : u});
    }
    return out;
}

namespace {

// edge at v colored c, or -1 (proper colorings have at most one)
int edge_with_color(const EdgeColoring& col, int v, int c) {
    for (int e : col.graph().incident_edges(v))
        if (col.color(e) == c) return e;
    return -1;
}

} // namespace

KempeChain kempe_chain_at(const EdgeColoring& c, int v, int alpha, int beta) {
    if (alpha == beta || alpha < 0 || beta < 0 || alpha >= c.k() || beta >= c.k())
        throw std::invalid_argument("bad color pair");
    KempeChain chain;
    chain.alpha = alpha;
    chain.beta = beta;
    int ea = edge_with_color(c, v, alpha);
    int eb = edge_with_color(c, v, beta);
    if (ea == -1 && eb == -1) {
        chain.end_a = chain.end_b = v;
        return chain;
    }
    auto walk = [&](int start_edge, int from) {
        std::vector<int> edges;
        int cur_v = from;
        int cur_e = start_edge;
        while (cur_e != -1) {
            edges.push_back(cur_e);
            cur_v = c.graph().other_end(cur_e, cur_v);
            if (cur_v == v && edges.size() > 1) return std::make_pair(edges, -1); // closed cycle
            int want = c.color(cur_e) == alpha ? beta : alpha;
            cur_e = edge_with_color(c, cur_v, want);
        }
        return std::make_pair(edges, cur_v);
    };
    if (ea != -1 && eb != -1) {
        auto [fwd, fwd_end] = walk(ea, v);
        if (fwd_end == -1) { // v lies on a cycle
            chain.cycle = true;
            chain.edges = fwd;
            chain.end_a = chain.end_b = v;
            return chain;
        }
        auto [bwd, bwd_end] = walk(eb, v);
        std::reverse(bwd.begin(), bwd.end());
        chain.edges = std::move(bwd);
        chain.edges.insert(chain.edges.end(), fwd.begin(), fwd.end());
        chain.end_a = bwd_end;
        chain.end_b = fwd_end;
        return chain;
    }
    auto [edges, far] = walk(ea != -1 ? ea : eb, v);
    chain.edges = std::move(edges);
    chain.end_a = v;
    chain.end_b = far;
    return chain;
}

EdgeColoring switch_chain(const EdgeColoring& c, const KempeChain& chain) {
    for (int e : chain.edges) {
        int col = c.color(e);
        if (col != chain.alpha && col != chain.beta)
            throw StaleChain("chain edge " + std::to_string(e) + " no longer alpha/beta");
    }
    EdgeColoring out = c;
    for (int e : chain.edges) out.unset(e);
    for (int e : chain.edges)
        out.set(e, c.color(e) == chain.alpha ? chain.beta : chain.alpha);
    return out;
}

EdgeColoring switch_outside_tree(const EdgeColoring& c, std::span<const int> tree_vertices,
                                 int alpha, int beta) {
    if (alpha == beta) throw std::invalid_argument("alpha == beta");
    if (alpha < 0 || beta < 0 || alpha >= c.k() || beta >= c.k())
        throw std::invalid_argument("color out of range");
    ColorSet miss = c.missing_union(tree_vertices);
    if (!miss.test(alpha) || !miss.test(beta))
        throw std::invalid_argument("both colors must be missing somewhere in T");
    ColorSet bnd = colors_on_boundary(c, tree_vertices);
    if (bnd.test(alpha) || bnd.test(beta))
        throw std::invalid_argument("color appears on the boundary of T");
    // pairwise-disjoint missing sets; switching relies on it
    std::vector<char> owner(c.k(), 0);
    for (int v : tree_vertices) {
        ColorSet mv = c.missing(v);
        for (int col = 0; col < c.k(); ++col)
            if (mv.test(col)) {
                if (owner[col]) throw std::invalid_argument("T is not elementary");
                owner[col] = 1;
            }
    }
    const Multigraph& g = c.graph();
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : tree_vertices) in[v] = 1;
    EdgeColoring out = c;
    std::vector<int> touched;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (in[u] && in[v]) continue;
        int col = c.color(e);
        if (col == alpha || col == beta) touched.push_back(e);
    }
    for (int e : touched) out.unset(e);
    for (int e : touched) out.set(e, c.color(e) == alpha ? beta : alpha);
    return out;
}

std::vector<Leg> legs_of(const EdgeColoring& c, std::span<const int> vertices, int alpha,
                         int beta) {
    const Multigraph& g = c.graph();
    auto in = membership(g.vertex_count(), vertices);
    std::vector<Leg> legs;
    // Path chains only: walk inward from each chain endpoint outside H until
    // the first H vertex. Visit each chain once via its boundary edges.
    std::vector<char> edge_seen(g.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        int col = c.color(e);
        if (col != alpha && col != beta) continue;
        auto [u, v] = g.endpoints(e);
        if (in[u] == in[v]) continue;
        if (edge_seen[e]) continue;
        // this chain crosses the boundary; reconstruct it once
        KempeChain chain = kempe_chain_at(c, u, alpha, beta);
        for (int ce : chain.edges) edge_seen[ce] = 1;
        if (chain.cycle) continue;
        auto walk_from = [&](int endpoint, int first_edge_index, int step) {
            if (in[endpoint]) return;
            Leg leg;
            int cur = endpoint;
            for (int i = first_edge_index; i >= 0 && i < static_cast<int>(chain.edges.size());
                 i += step) {
                int ce = chain.edges[i];
                leg.edges.push_back(ce);
                cur = g.other_end(ce, cur);
                if (in[cur]) {
                    leg.exit_vertex = cur;
                    leg.far_vertex = endpoint;
                    std::reverse(leg.edges.begin(), leg.edges.end());
                    legs.push_back(std::move(leg));
                    return;
                }
            }
        };
        walk_from(chain.end_a, 0, 1);
        walk_from(chain.end_b, static_cast<int>(chain.edges.size()) - 1, -1);
    }
    return legs;
}

bool is_b_closed(const EdgeColoring& c, std::span<const int> vertices, const ColorSet& b) {
    return (colors_on_boundary(c, vertices) & b).none();
}

bool is_b_minus_closed(const EdgeColoring& c, std::span<const int> vertices, const ColorSet& b) {
    return is_b_closed(c, vertices, c.missing_union(vertices) & ~b);
}

} // namespace ecl
