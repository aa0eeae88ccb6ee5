#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecl/colorset.hpp"
#include "ecl/multigraph.hpp"

namespace ecl {

constexpr int kUncolored = -1;

// Partial proper edge-k-coloring. Keeps the per-vertex present sets phi(v)
// in sync with the assignment; missing sets are derived. Value type: the
// constructor snapshots the graph into shared immutable storage, so copies
// are cheap and never dangle.
class EdgeColoring {
  public:
    EdgeColoring(const Multigraph& g, int k);

    int k() const { return k_; }
    const Multigraph& graph() const { return *g_; }
    int color(int edge) const { return color_[edge]; }
    bool colored(int edge) const { return color_[edge] != kUncolored; }

    void set(int edge, int color);
    void unset(int edge);
    // assigns without the properness assertion and rebuilds phi(v) caches;
    // for constructing deliberately broken fixtures
    void force_set(int edge, int color);

    // phi(v): colors on colored edges incident to v
    const ColorSet& present(int v) const { return present_[v]; }
    // phibar(v)
    ColorSet missing(int v) const { return full_color_set(k_) & ~present_[v]; }
    bool missing_at(int v, int c) const { return !present_[v].test(c); }

    ColorSet missing_union(std::span<const int> vertices) const;
    ColorSet present_union(std::span<const int> vertices) const;

    bool operator==(const EdgeColoring& o) const {
        return k_ == o.k_ && color_ == o.color_;
    }

  private:
    std::shared_ptr<const Multigraph> g_;
    int k_;
    std::vector<int> color_;
    std::vector<ColorSet> present_;
};

struct ProperReport {
    bool ok = true;
    int conflict_vertex = -1;
    int conflict_edge_a = -1;
    int conflict_edge_b = -1;
    bool cache_consistent = true;
    std::string describe() const;
};

// Re-derives phi(v) from scratch, reports the first adjacent same-color pair
// and whether the cached sets agree with the recomputation.
ProperReport validate_proper(const EdgeColoring& c);

// --- vertex-set color queries ----------------------------------------------
// The paper's phi(H) is used with more than one reading; callers pick
// explicitly. All take the vertex set of H.

// colors on edges with both ends in H
ColorSet colors_within(const EdgeColoring& c, std::span<const int> vertices);
// colors on edges with exactly one end in H
ColorSet colors_on_boundary(const EdgeColoring& c, std::span<const int> vertices);
// colors on edges with at least one end in H
ColorSet colors_incident(const EdgeColoring& c, std::span<const int> vertices);

// boundary edges of S with in-end / out-end tagging
struct BoundaryEdge {
    int edge;
    int in_end;
    int out_end;
};
std::vector<BoundaryEdge> boundary(const Multigraph& g, std::span<const int> vertices);

// --- Kempe chains ------------------------------------------------------------

struct KempeChain {
    int alpha = 0, beta = 0;
    bool cycle = false;
    std::vector<int> edges; // consecutive along the chain
    // path endpoints (walk order); both equal the seed vertex for the
    // degenerate zero-edge chain
    int end_a = -1, end_b = -1;
};

// Maximal (alpha,beta)-chain through v: a path, an even cycle, or a single
// vertex when v misses both colors.
KempeChain kempe_chain_at(const EdgeColoring& c, int v, int alpha, int beta);

struct StaleChain : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Swap alpha and beta on the chain's edges. Throws StaleChain if the edges
// no longer carry the expected colors.
EdgeColoring switch_chain(const EdgeColoring& c, const KempeChain& chain);

// phi/(G-T,alpha,beta): swap alpha and beta on every edge not induced by T.
// Requires alpha != beta, both missing somewhere in T, neither on a boundary
// edge of T, and T elementary.
EdgeColoring switch_outside_tree(const EdgeColoring& c, std::span<const int> tree_vertices,
                                 int alpha, int beta);

// --- legs --------------------------------------------------------------------

struct Leg {
    int exit_vertex; // end in H
    int far_vertex;  // end outside H, missing alpha or beta
    std::vector<int> edges; // ordered from the exit outwards
};

std::vector<Leg> legs_of(const EdgeColoring& c, std::span<const int> vertices, int alpha,
                         int beta);

inline bool interchangeable(const EdgeColoring& c, std::span<const int> vertices, int alpha,
                            int beta) {
    return legs_of(c, vertices, alpha, beta).size() <= 1;
}

bool is_b_closed(const EdgeColoring& c, std::span<const int> vertices, const ColorSet& b);
// (phibar(H) - B)-closed
bool is_b_minus_closed(const EdgeColoring& c, std::span<const int> vertices, const ColorSet& b);

} // namespace ecl
