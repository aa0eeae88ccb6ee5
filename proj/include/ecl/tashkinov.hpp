#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ecl/coloring.hpp"
#include "ecl/multigraph.hpp"

namespace ecl {

// Alternating sequence (y0, e1, y1, ..., ep, yp): vertices[i] = y_i,
// edges[i-1] = e_i joins y_i to an earlier vertex; edges[0] is the uncolored
// edge of the k-triple. The positional index is the linear order on T.
struct TreeSeq {
    std::vector<int> vertices;
    std::vector<int> edges;

    int size() const { return static_cast<int>(vertices.size()); } // |T| = |V(T)|
    bool contains_vertex(int v) const {
        for (int x : vertices)
            if (x == v) return true;
        return false;
    }
    // vertices of the prefix with nverts vertices
    std::span<const int> prefix_vertices(int nverts) const {
        return {vertices.data(), static_cast<size_t>(nverts)};
    }
    // edges of that prefix (e_1..e_{nverts-1})
    std::span<const int> prefix_edges(int nverts) const {
        return {edges.data(), static_cast<size_t>(nverts > 0 ? nverts - 1 : 0)};
    }
};

// colors on the sequence's own edges (the paper's phi(T) for tree sequences)
ColorSet tree_used_colors(const EdgeColoring& c, std::span<const int> tree_edges);

struct ElementaryReport {
    bool elementary = true;
    int vertex_a = -1, vertex_b = -1, shared_color = -1;
};

// pairwise-disjoint missing sets
ElementaryReport verify_elementary(const EdgeColoring& c, std::span<const int> vertices);

struct ClosureReport {
    bool closed = true;
    bool strongly_closed = true;
    int violating_edge = -1;    // boundary edge colored with a missing color
    int repeated_color = -1;    // witness against strong closure
    // set only when a B was supplied
    std::optional<bool> b_closed;
    std::optional<bool> b_minus_closed;
};

ClosureReport closure_report(const EdgeColoring& c, std::span<const int> vertices,
                             const std::optional<ColorSet>& b = std::nullopt);

// TAA: grow from (y0, e, y1), adding boundary edges whose color is missing in
// the current tree until none is eligible. Tie-break: smallest edge id; a
// nonzero seed permutes edge priority for restart diversity. The result of a
// maximal run is closed.
TreeSeq build_maximal_tashkinov(const Multigraph& g, const EdgeColoring& c, int e,
                                uint64_t seed = 0);

// continue TAA on an existing sequence (used by the ETT builders)
void extend_taa(const Multigraph& g, const EdgeColoring& c, TreeSeq& tree, uint64_t seed = 0);

// paper's tree-size bound for non-elementary graphs: max{2(k-Delta)+1, 11}
int scheide_tree_bound(int k, int delta);

} // namespace ecl
