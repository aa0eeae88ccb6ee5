#pragma once

#include <set>
#include <string>
#include <vector>

#include "ecl/certificate.hpp"
#include "ecl/multigraph.hpp"
#include "ecl/oracles.hpp"

namespace ecl {

enum class Check {
    kGoldberg,
    kTashkinovElementary,
    kEttElementary,
    kNearPerfect,
    kOracleSandwich,
};

std::string check_name(Check c);
std::set<Check> all_checks();
std::set<Check> parse_checks(const std::string& comma_separated);

struct RandomCorpusSpec {
    int count = 0;
    int n_max = 6;
    int mu_max = 3;
    int budget_max = 14;
};

struct CorpusSpec {
    int enumerate_n = 0; // 0 = no exhaustive slice
    int enumerate_mu = 0;
    RandomCorpusSpec random;
    std::vector<Multigraph> extra;
    int ktriples_per_core = 2; // (edge, seed) combos checked per qualifying core

    std::string describe() const;
};

struct CampaignReport {
    std::string corpus;
    std::vector<std::string> checks;
    uint64_t seed = 0;
    int instances = 0;
    int class_delta = 0;          // chi' = Delta
    int class_delta_plus_1 = 0;   // chi' = Delta+1
    int class_ge_delta_plus_2 = 0;
    int ktriples_checked = 0;
    int rungs_seen = 0; // connecting-edge extensions exercised
    std::vector<Json> goldberg_violations;
    std::vector<Json> theorem_violations;
    std::vector<std::string> timeouts; // instance keys
    double elapsed_seconds = 0;

    // canonical serialization: everything except wall-clock time, so equal
    // runs produce byte-identical reports regardless of the job count
    Json to_json() const;
};

CampaignReport run_campaign(const CorpusSpec& corpus, const std::set<Check>& checks, int jobs,
                            uint64_t seed, Millis per_instance_timeout = kNoTimeout);

} // namespace ecl
