#include "ecl/campaign.hpp"

#include <atomic>
#include <thread>

#include "ecl/ett.hpp"
#include "ecl/rng.hpp"
#include "ecl/tashkinov.hpp"

namespace ecl {

std::string check_name(Check c) {
    switch (c) {
        case Check::kGoldberg: return "goldberg";
        case Check::kTashkinovElementary: return "tashkinov-elementary";
        case Check::kEttElementary: return "ett-elementary";
        case Check::kNearPerfect: return "near-perfect";
        case Check::kOracleSandwich: return "oracle-sandwich";
    }
    return "?";
}

std::set<Check> all_checks() {
    return {Check::kGoldberg, Check::kTashkinovElementary, Check::kEttElementary,
            Check::kNearPerfect, Check::kOracleSandwich};
}

std::set<Check> parse_checks(const std::string& csv) {
    if (csv == "all") return all_checks();
    std::set<Check> out;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        std::string tok = csv.substr(pos, comma == std::string::npos ? csv.size() - pos
                                                                     : comma - pos);
        if (!tok.empty()) {
            bool known = false;
            for (Check c : all_checks())
                if (check_name(c) == tok) {
                    out.insert(c);
                    known = true;
                }
            if (!known) throw std::invalid_argument("unknown check: " + tok);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string CorpusSpec::describe() const {
    std::string s;
    if (enumerate_n > 0)
        s += "enumerate(n<=" + std::to_string(enumerate_n) +
             ",mu<=" + std::to_string(enumerate_mu) + ")";
    if (random.count > 0) {
        if (!s.empty()) s += "+";
        s += "random(count=" + std::to_string(random.count) +
             ",n<=" + std::to_string(random.n_max) + ",mu<=" + std::to_string(random.mu_max) +
             ",m<=" + std::to_string(random.budget_max) + ")";
    }
    if (!extra.empty()) {
        if (!s.empty()) s += "+";
        s += std::to_string(extra.size()) + " explicit";
    }
    if (s.empty()) s = "empty";
    return s;
}

Json CampaignReport::to_json() const {
    return Json{{"schema", "ecl-campaign-v1"},
                {"corpus", corpus},
                {"checks", checks},
                {"seed", seed},
                {"instances", instances},
                {"chi_classes",
                 {{"delta", class_delta},
                  {"delta_plus_1", class_delta_plus_1},
                  {"ge_delta_plus_2", class_ge_delta_plus_2}}},
                {"ktriples_checked", ktriples_checked},
                {"rungs_seen", rungs_seen},
                {"goldberg_violations", goldberg_violations},
                {"theorem_violations", theorem_violations},
                {"timeouts", timeouts}};
}

namespace {

struct InstanceResult {
    bool timed_out = false;
    int chi_class = -1; // 0, 1, 2 for Delta, Delta+1, >= Delta+2
    int ktriples = 0;
    int rungs = 0;
    std::vector<Json> goldberg_violations;
    std::vector<Json> theorem_violations;
};

struct WorkItem {
    Multigraph graph;
    std::string key;
    uint64_t seed;
};

void run_theorem_checks(const Multigraph& g, const std::set<Check>& checks, uint64_t iseed,
                        int ktriples_per_core, Millis timeout, InstanceResult& res) {
    Multigraph core = critical_core(g, timeout);
    if (core.edge_count() == 0) return;
    ChiResult chi = exact_chromatic_index(core, timeout);
    if (!chi.exact) throw OracleTimeout("core chi timed out");
    int k = chi.chi - 1;
    GraphStats cs = stats(core);
    if (k < cs.max_degree + 1) return; // no k-triple exists for this core
    auto violation = [&](const std::string& check, const std::string& detail) {
        res.theorem_violations.push_back(make_violation_certificate(core, check, detail, timeout));
    };
    for (int combo = 0; combo < ktriples_per_core; ++combo) {
        int edge = static_cast<int>(mix_seed(iseed, combo) % core.edge_count());
        uint64_t cseed = mix_seed(iseed, 1000 + combo);
        EdgeColoring col = make_k_triple_coloring(core, edge, k, cseed);
        ++res.ktriples;
        if (checks.count(Check::kTashkinovElementary)) {
            TreeSeq tree = build_maximal_tashkinov(core, col, edge, cseed);
            auto elem = verify_elementary(col, tree.vertices);
            auto closure = closure_report(col, tree.vertices);
            if (!elem.elementary)
                violation("tashkinov-elementary",
                          "maximal tree shares missing color " +
                              std::to_string(elem.shared_color) + " at vertices " +
                              std::to_string(elem.vertex_a) + "," +
                              std::to_string(elem.vertex_b));
            if (!closure.closed) violation("tashkinov-closed", "maximal tree is not closed");
            if (tree.size() % 2 == 0) violation("tashkinov-odd", "closed tree has even order");
        }
        if (checks.count(Check::kEttElementary)) {
            try {
                EttPolicy policy;
                policy.taa_seed = cseed;
                EttResult ett = build_ett(core, col, edge, policy);
                res.rungs += static_cast<int>(ett.records.size());
                if (!verify_r1(col, ett.tree, ett.ladder, ett.records).ok)
                    violation("ett-r1", "builder output fails R1");
                auto def = verify_ett_definition(core, col, ett.tree, ett.records);
                if (!def.ok) violation("ett-definition", def.why);
                auto elem = verify_elementary(col, ett.tree.vertices);
                if (!elem.elementary)
                    violation("ett-elementary", "R1 ETT not elementary: color " +
                                                    std::to_string(elem.shared_color));
                SplitTailResult st = build_split_tail(core, col, ett);
                if (st.refuted) {
                    violation("split-tail-feasibility", st.refutation);
                } else {
                    if (!closure_report(col, st.tree.vertices).closed)
                        violation("split-tail-closed", "T' is not closed");
                    if (!verify_r2(core, col, st.tree, st.records, st.tail).ok)
                        violation("split-tail-r2", "builder output fails R2");
                    auto elem2 = verify_elementary(col, st.tree.vertices);
                    if (!elem2.elementary)
                        violation("ett-elementary", "R2 split-tail ETT not elementary: color " +
                                                        std::to_string(elem2.shared_color));
                }
            } catch (const ElementarityViolation& ex) {
                violation("ett-elementary", ex.what());
            }
        }
        if (checks.count(Check::kNearPerfect) && core.vertex_count() % 2 == 1) {
            NpdResult npd = near_perfect_decomposition(core, edge, k, timeout);
            if (npd.refuted) {
                violation("near-perfect", npd.reason);
            } else if (npd.found) {
                // re-verify coverage: every class covers |V|-1 vertices
                const EdgeColoring& part = *npd.partition;
                for (int c = 0; c < k; ++c) {
                    int covered = 0;
                    for (int v = 0; v < core.vertex_count(); ++v)
                        if (part.present(v).test(c)) ++covered;
                    if (covered != core.vertex_count() - 1)
                        violation("near-perfect",
                                  "class " + std::to_string(c) + " covers " +
                                      std::to_string(covered) + " vertices");
                }
            } else if (npd.timed_out) {
                throw OracleTimeout("near-perfect search timed out");
            }
        }
    }
}

InstanceResult process_instance(const WorkItem& item, const std::set<Check>& checks,
                                int ktriples_per_core, Millis timeout) {
    InstanceResult res;
    const Multigraph& g = item.graph;
    try {
        GraphStats s = stats(g);
        auto [omega, witness] = density(g);
        ChiResult chi = exact_chromatic_index(g, timeout);
        if (!chi.exact) {
            res.timed_out = true;
            return res;
        }
        res.chi_class = chi.chi <= s.max_degree ? 0 : (chi.chi == s.max_degree + 1 ? 1 : 2);
        if (checks.count(Check::kOracleSandwich)) {
            bool ok = omega <= chi.chi && chi.chi <= s.max_degree + s.multiplicity &&
                      chi.chi >= s.max_degree;
            if (!ok)
                res.goldberg_violations.push_back(make_violation_certificate(
                    g, "oracle-sandwich",
                    "omega=" + std::to_string(omega) + " chi=" + std::to_string(chi.chi),
                    timeout));
        }
        if (checks.count(Check::kGoldberg)) {
            if (chi.chi >= s.max_degree + 2 && chi.chi != omega)
                res.goldberg_violations.push_back(make_violation_certificate(
                    g, "goldberg",
                    "chi'=" + std::to_string(chi.chi) + " >= Delta+2 but omega=" +
                        std::to_string(omega),
                    timeout));
        }
        if (checks.count(Check::kTashkinovElementary) || checks.count(Check::kEttElementary) ||
            checks.count(Check::kNearPerfect))
            run_theorem_checks(g, checks, item.seed, ktriples_per_core, timeout, res);
    } catch (const OracleTimeout&) {
        res.timed_out = true;
    }
    return res;
}

} // namespace

CampaignReport run_campaign(const CorpusSpec& corpus, const std::set<Check>& checks, int jobs,
                            uint64_t seed, Millis per_instance_timeout) {
    auto started = std::chrono::steady_clock::now();
    CampaignReport report;
    report.corpus = corpus.describe();
    report.seed = seed;
    for (Check c : checks) report.checks.push_back(check_name(c));

    std::vector<WorkItem> items;
    if (corpus.enumerate_n > 0) {
        for (auto& g : enumerate_all(corpus.enumerate_n, corpus.enumerate_mu)) {
            std::string key = "enum:" + canonical_key_string(g);
            uint64_t iseed = mix_seed(seed, fnv1a64(key));
            items.push_back({std::move(g), std::move(key), iseed});
        }
    }
    for (size_t i = 0; i < corpus.extra.size(); ++i) {
        std::string canon = canonical_key_string(corpus.extra[i]);
        std::string key = "extra" + std::to_string(i) + ":" + canon;
        uint64_t iseed = mix_seed(seed, fnv1a64("extra:" + canon));
        items.push_back({corpus.extra[i], std::move(key), iseed});
    }
    if (corpus.random.count > 0) {
        for (int i = 0; i < corpus.random.count; ++i) {
            Rng gen(mix_seed(seed, 0xA11CE000ULL + i));
            int n = 2 + gen.below_int(corpus.random.n_max - 1);
            int mu = 1 + gen.below_int(corpus.random.mu_max);
            int max_m = std::min(corpus.random.budget_max, mu * n * (n - 1) / 2);
            int budget = n - 1 + (max_m > n - 1 ? gen.below_int(max_m - n + 2) : 0);
            Multigraph g = random_multigraph(n, mu, budget, gen.next());
            std::string canon = canonical_key_string(g);
            std::string key = "rand" + std::to_string(i) + ":" + canon;
            // seed by canonical form so sharding never changes it
            uint64_t iseed = mix_seed(seed, fnv1a64("rand:" + canon));
            items.push_back({std::move(g), std::move(key), iseed});
        }
    }

    std::vector<InstanceResult> results(items.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < items.size(); ++i)
            results[i] = process_instance(items[i], checks, corpus.ktriples_per_core,
                                          per_instance_timeout);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= items.size()) return;
                results[i] = process_instance(items[i], checks, corpus.ktriples_per_core,
                                              per_instance_timeout);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // order-independent fold: results land in item-index slots
    report.instances = static_cast<int>(items.size());
    for (size_t i = 0; i < items.size(); ++i) {
        const InstanceResult& r = results[i];
        if (r.timed_out) {
            report.timeouts.push_back(items[i].key);
            continue;
        }
        if (r.chi_class == 0) report.class_delta++;
        if (r.chi_class == 1) report.class_delta_plus_1++;
        if (r.chi_class == 2) report.class_ge_delta_plus_2++;
        report.ktriples_checked += r.ktriples;
        report.rungs_seen += r.rungs;
        for (const auto& v : r.goldberg_violations) report.goldberg_violations.push_back(v);
        for (const auto& v : r.theorem_violations) report.theorem_violations.push_back(v);
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

} // namespace ecl
