#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ecl/bignat.hpp"
#include "ecl/coloring.hpp"
#include "ecl/multigraph.hpp"
#include "ecl/tashkinov.hpp"

namespace ecl {

// Extending a closed tree T through its boundary: f is the first boundary
// edge along the (delta,gamma)-path from the unique vertex of T missing
// gamma, where delta is defective (appears twice or more on the boundary)
// and gamma is missing in T but unused on T's own edges.
struct ConnectingRecord {
    int edge = -1;
    int delta = -1;
    int gamma = -1;
    int rung = 0; // 1-based
};

// Nested closed prefixes T_1 c T_2 c ... c T_n c T, one per connecting edge.
struct Ladder {
    std::vector<int> prefix_len; // |T_i| in vertices, per rung

    int rungs() const { return static_cast<int>(prefix_len.size()); }
};

int min_rung_with_delta(const std::vector<ConnectingRecord>& records, int delta);
int max_rung_with_delta(const std::vector<ConnectingRecord>& records, int delta);

// Raised when a step requires the "unique vertex missing gamma" and the tree
// has two of them: the instance refutes elementarity and the caller turns it
// into a certificate instead of proceeding.
struct ElementarityViolation : std::runtime_error {
    int vertex_a, vertex_b, color;
    ElementarityViolation(int a, int b, int c)
        : std::runtime_error("color " + std::to_string(c) + " missing at vertices " +
                             std::to_string(a) + " and " + std::to_string(b)),
          vertex_a(a), vertex_b(b), color(c) {}
};

// All connecting-edge candidates of a closed tree, ordered (delta asc,
// gamma asc). Throws if T is not closed.
std::vector<ConnectingRecord> find_connecting_edges(const Multigraph& g, const EdgeColoring& c,
                                                    const TreeSeq& tree);

struct EttPolicy {
    int max_rungs = 64;
    bool distinct_connecting_colors = false;
    uint64_t taa_seed = 0;
};

struct EttResult {
    TreeSeq tree;
    Ladder ladder;
    std::vector<ConnectingRecord> records;

    // rung profile (|T_1|, ..., |T_n|, |T|); the closed tree itself counts as
    // the final entry (the T_{n+1} convention)
    std::vector<int> profile() const {
        std::vector<int> p = ladder.prefix_len;
        p.push_back(tree.size());
        return p;
    }
};

// Alternates TAA-to-closure with connecting-edge extension. Every chosen
// rung keeps condition R1 satisfiable for the whole ladder at choice time;
// stops when closed with no admissible candidate or the rung budget is
// spent. The output is always closed.
EttResult build_ett(const Multigraph& g, const EdgeColoring& c, int e,
                    const EttPolicy& policy = {});

struct R1Report {
    bool ok = true;
    int bad_rung = 0; // 1-based when !ok
};

// gamma_i in phibar(T_{m_i}) - phi(T_{M_i}) for every rung
R1Report verify_r1(const EdgeColoring& c, const TreeSeq& tree, const Ladder& ladder,
                   const std::vector<ConnectingRecord>& records);

struct DefinitionReport {
    bool ok = true;
    std::string why;
};

// Definition-level re-check of the whole sequence, implemented independently
// of the builders (chain reconstruction goes through kempe_chain_at).
DefinitionReport verify_ett_definition(const Multigraph& g, const EdgeColoring& c,
                                       const TreeSeq& tree,
                                       const std::vector<ConnectingRecord>& records);

// --- split tails / condition R2 ---------------------------------------------

struct SplitTail {
    // |T_{n,0}|, |T_{n,1}|, ..., |T_{n,q}|; the tree itself is T_{n,q+1}
    std::vector<int> level_prefix_len;
    // reserved two-color sets per level: reserved[j][delta_h] = Gamma^{n,j}_h,
    // keyed by the deficiency set D_{n,j}
    std::vector<std::map<int, std::pair<int, int>>> reserved;

    int splitters() const { return static_cast<int>(level_prefix_len.size()) - 1; } // q
};

struct R2Report {
    bool ok = true;
    std::string failed_clause; // "1", "1a", "1b", "2"
    int level = -1;
    int delta = -1;
};

// Checks the supplied witness only; it never searches for one.
R2Report verify_r2(const Multigraph& g, const EdgeColoring& c, const TreeSeq& tree,
                   const std::vector<ConnectingRecord>& records, const SplitTail& tail);

struct SplitTailResult {
    TreeSeq tree; // T', closed
    SplitTail tail;
    std::vector<ConnectingRecord> records;
    Ladder ladder;
    bool refuted = false;
    std::string refutation; // reserved-set infeasibility witness
};

// Statement B construction: rebuilds the tail after the last rung of `ett`
// as a split tail satisfying R2, ending in a closed T'.
SplitTailResult build_split_tail(const Multigraph& g, const EdgeColoring& c,
                                 const EttResult& ett);

// --- stability ----------------------------------------------------------------

struct StabilityReport {
    bool same_connecting_data = true;
    std::vector<char> rung_path_unchanged;
    std::string detail;

    bool stable() const {
        if (!same_connecting_data) return false;
        for (char ok : rung_path_unchanged)
            if (!ok) return false;
        return true;
    }
};

// T-stability of c_new against c_old: same connecting edges/colors/companions
// and, per rung, the same (delta_i,gamma_i)-subpath from v(gamma_i) to f_i.
StabilityReport is_stable(const Multigraph& g, const EdgeColoring& c_old,
                          const EdgeColoring& c_new, const TreeSeq& tree, const Ladder& ladder,
                          const std::vector<ConnectingRecord>& records);

// --- MP search -----------------------------------------------------------------

struct MpWitness {
    int budget = 0;
    uint64_t seed = 0;
    std::vector<int> best_profile;
    uint64_t best_restart_seed = 0;
    std::vector<std::vector<int>> history; // best-so-far after each restart
};

struct MpResult {
    EdgeColoring coloring;
    EttResult ett;
    MpWitness witness;
};

// Condition MP asks for maximum rung sizes over all colorings of G-e, which
// is not certifiable; this is the documented best-effort restart search. The
// best (coloring, ETT) under lexicographic rung profile is kept.
MpResult mp_search(const Multigraph& g, int e, int k, int budget, uint64_t seed);

// --- SETTs and the tail-growth measurements ------------------------------------

struct Main2aReport {
    int rungs = 0;
    int k = 0, delta = 0, mu = 0, t = 0;
    int omega = 0;
    bool graph_elementary = false; // the theorem assumes this is false
    std::vector<int> missing_tn;  // phibar(T_n)
    std::vector<int> tail_colors; // phi(T - T_n), tree edges of the tail
    bool holds1 = false;          // phibar(T_n) subset of phi(T - T_n)
    int tail_size = 0;            // |T - T_n|
    int rhs2 = 0;                 // 2|phibar(T_n)| + 2
    bool holds2 = false;
    BigNat rhs3_num, rhs3_den;    // 2(mu+t)^s / mu^s, s = |phibar(T_n)|
    bool holds3 = false;          // tail_size * den > num
    int restarts = 0;
    uint64_t seed = 0;
    int sett_gamma = -1;
    std::vector<int> rung_prefix_len;
    TreeSeq tree;      // the measured mTAA tree
    int base_len = 0;  // |T_n| as a prefix length of `tree`
};

// 2*(1 + t/mu)^s as an exact fraction
std::pair<BigNat, BigNat> main2a_rhs3(int t, int mu, int s);

// Builds a closed SETT (one shared companion color) maximizing the rung
// count over restarts, regrows the tail with mTAA (boundary edges whose
// color is missing outside T_n first), and reports the three tail-growth
// quantities. holds-flags are diagnostics: the theorem's hypothesis (G not
// elementary) is recorded, not assumed.
Main2aReport measure_sett(const Multigraph& g, const EdgeColoring& c, int e, int restarts = 8,
                          uint64_t seed = 1);

} // namespace ecl
