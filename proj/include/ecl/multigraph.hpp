#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ecl {

// Loopless multigraph. Vertices and edges are dense integer indices; edge
// ids follow construction order, so every downstream tie-break on "smallest
// edge id" is reproducible.
class Multigraph {
  public:
    Multigraph() = default;
    explicit Multigraph(int vertex_count) : n_(vertex_count) {
        if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
        inc_.resize(n_);
    }

    int add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::out_of_range("vertex index out of range");
        int id = static_cast<int>(edges_.size());
        edges_.emplace_back(u, v);
        inc_[u].push_back(id);
        inc_[v].push_back(id);
        return id;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::pair<int, int> endpoints(int edge) const { return edges_[edge]; }
    int other_end(int edge, int v) const {
        auto [a, b] = edges_[edge];
        return a == v ? b : a;
    }
    const std::vector<int>& incident_edges(int v) const { return inc_[v]; }
    int degree(int v) const { return static_cast<int>(inc_[v].size()); }

    bool operator==(const Multigraph& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> inc_;
};

struct GraphStats {
    int max_degree = 0;   // Delta
    int multiplicity = 0; // mu, max parallel edges over a vertex pair
    int n = 0;
    int m = 0;
};

GraphStats stats(const Multigraph& g);
bool is_connected(const Multigraph& g);

// --- file format ----------------------------------------------------------
// UTF-8 text, '#' comment lines, header "multigraph <n>", then one
// "e <u> <v>" line per edge (parallel edges are repeated lines).

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

Multigraph parse_graph(const std::string& text);
// Bit-exact emission: header, then edges sorted by (min endpoint, max
// endpoint, insertion order).
std::string emit_graph(const Multigraph& g);

// --- generators ------------------------------------------------------------

// Cycle 0-1-...-(n-1)-0 where the pair {i, i+1 mod n} carries mult[i]
// parallel edges. fat_cycle(3, {2,2,2}) is the fat triangle FT(2).
Multigraph fat_cycle(int n, const std::vector<int>& mult);

// Connected random multigraph: seeded spanning tree plus uniform extra edges
// subject to the pair multiplicity cap. Deterministic in (all parameters).
Multigraph random_multigraph(int n, int mu_max, int edge_budget, uint64_t seed);

// Every connected loopless multigraph with 2 <= |V| <= n_bound and
// multiplicity <= mu_max, exactly once up to isomorphism.
std::vector<Multigraph> enumerate_all(int n_bound, int mu_max);

// Canonical key: minimum over all vertex permutations of the upper-triangle
// multiplicity matrix, prefixed by n. Brute force; callers keep n small.
std::vector<int> canonical_key(const Multigraph& g);
std::string canonical_key_string(const Multigraph& g);

} // namespace ecl
