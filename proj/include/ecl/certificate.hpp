#pragma once

#include <string>

#include <json.hpp>

#include "ecl/ett.hpp"
#include "ecl/oracles.hpp"

namespace ecl {

using Json = nlohmann::json;

inline constexpr const char* kCertSchema = "ecl-cert-v1";

// --- payload serialization ---------------------------------------------------

Json coloring_to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const Multigraph& g, const Json& j);
Json tree_to_json(const TreeSeq& t);
TreeSeq tree_from_json(const Json& j);
Json records_to_json(const std::vector<ConnectingRecord>& records);
std::vector<ConnectingRecord> records_from_json(const Json& j);
Json split_tail_to_json(const SplitTail& tail);
SplitTail split_tail_from_json(const Json& j);
Json main2a_to_json(const Main2aReport& rep);

// --- certificate builders ----------------------------------------------------
// Each runs the pipeline it certifies and embeds everything a re-validator
// needs: the graph, the payloads, and the claimed flags.

Json make_instance_certificate(const Multigraph& g, Millis timeout = kNoTimeout);
Json make_tashkinov_certificate(const Multigraph& g, int edge, uint64_t seed,
                                Millis timeout = kNoTimeout);
Json make_ett_certificate(const Multigraph& g, int edge, int budget, uint64_t seed,
                          Millis timeout = kNoTimeout);
Json make_split_tail_certificate(const Multigraph& g, int edge, int budget, uint64_t seed,
                                 Millis timeout = kNoTimeout);
Json make_main2a_certificate(const Multigraph& g, int edge, int restarts, uint64_t seed,
                             Millis timeout = kNoTimeout);
// a check that failed: full instance payload plus the violation description
Json make_violation_certificate(const Multigraph& g, const std::string& check,
                                const std::string& detail, Millis timeout = kNoTimeout);

struct RevalidationResult {
    bool ok = true;
    std::string first_failure;
};

// Re-runs every definitional verifier against the embedded graph and
// payloads. Fail-closed: unknown fields or missing claimed flags reject.
RevalidationResult revalidate_certificate(const Json& cert, Millis timeout = kNoTimeout);

} // namespace ecl
