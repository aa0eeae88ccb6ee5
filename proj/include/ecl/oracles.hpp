#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "ecl/coloring.hpp"
#include "ecl/multigraph.hpp"

namespace ecl {

using Millis = std::chrono::milliseconds;
constexpr Millis kNoTimeout{0}; // 0 = unlimited

struct DensityWitness {
    std::vector<int> vertices; // sorted; lexicographically smallest maximizer
    int induced_edges = 0;
    int value = 0;
};

// omega(G) = max over induced H with |V(H)| >= 2 of ceil(|E(H)| / floor(|V(H)|/2)).
// Exact; exhaustive over subsets for n <= 16, odd-size subsets and pairs above.
std::pair<int, DensityWitness> density(const Multigraph& g);

struct ChiResult {
    bool exact = false;
    int chi = 0;         // meaningful when exact
    int lower = 0;       // bracket, always valid
    int upper = 0;
    std::optional<EdgeColoring> witness; // proper chi-coloring when exact
};

// Exact chromatic index by branch and bound between max(Delta, omega) and
// Delta + mu. A timeout is a distinct outcome (exact=false), not an error.
ChiResult exact_chromatic_index(const Multigraph& g, Millis timeout = kNoTimeout);

struct OracleTimeout : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CriticalityReport {
    int k = 0;
    int chi = 0;
    bool is_critical = false;
    std::vector<int> chi_minus_edge; // chi'(G - f) per edge id
};

// is_critical iff chi'(G) = k+1 >= Delta+1 and chi'(G-f) <= k for every f.
// Edge deletions suffice: chi' is monotone under subgraph inclusion.
CriticalityReport criticality_check(const Multigraph& g, int k, Millis timeout = kNoTimeout);

// Repeatedly deletes edges whose removal keeps chi', then drops isolated
// vertices. The result is edge-(chi'-1)-critical with the same chi'.
Multigraph critical_core(const Multigraph& g, Millis timeout = kNoTimeout);

// Proper k-coloring of G-e with e left uncolored; deterministic in seed.
// Requires k >= Delta+1; callers wanting the full k-triple contract verify
// criticality separately (criticality_check).
EdgeColoring make_k_triple_coloring(const Multigraph& g, int e, int k, uint64_t seed = 0);

struct NpdResult {
    bool found = false;
    bool refuted = false; // exhaustive search proved no such partition
    bool timed_out = false;
    std::optional<EdgeColoring> partition; // k classes, each near-perfect
    std::string reason;
};

// Partition of E(G)-e into k near-perfect matchings (each class covers
// exactly |V|-1 vertices). Requires odd |V|.
NpdResult near_perfect_decomposition(const Multigraph& g, int e, int k,
                                     Millis timeout = kNoTimeout);

} // namespace ecl
