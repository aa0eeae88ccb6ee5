#include "ecl/certificate.hpp"

#include <algorithm>
#include <set>

namespace ecl {

Json coloring_to_json(const EdgeColoring& c) {
    Json colors = Json::array();
    for (int e = 0; e < c.graph().edge_count(); ++e) {
        if (c.colored(e))
            colors.push_back(c.color(e));
        else
            colors.push_back(nullptr);
    }
    return Json{{"k", c.k()}, {"colors", colors}};
}

EdgeColoring coloring_from_json(const Multigraph& g, const Json& j) {
    EdgeColoring c(g, j.at("k").get<int>());
    const Json& colors = j.at("colors");
    if (static_cast<int>(colors.size()) != g.edge_count())
        throw std::invalid_argument("coloring length != edge count");
    for (int e = 0; e < g.edge_count(); ++e) {
        if (colors[e].is_null()) continue;
        c.force_set(e, colors[e].get<int>());
    }
    return c;
}

Json tree_to_json(const TreeSeq& t) {
    return Json{{"vertices", t.vertices}, {"edges", t.edges}};
}

TreeSeq tree_from_json(const Json& j) {
    TreeSeq t;
    t.vertices = j.at("vertices").get<std::vector<int>>();
    t.edges = j.at("edges").get<std::vector<int>>();
    return t;
}

Json records_to_json(const std::vector<ConnectingRecord>& records) {
    Json arr = Json::array();
    for (const auto& r : records)
        arr.push_back(Json{{"edge", r.edge}, {"delta", r.delta}, {"gamma", r.gamma},
                           {"rung", r.rung}});
    return arr;
}

std::vector<ConnectingRecord> records_from_json(const Json& j) {
    std::vector<ConnectingRecord> out;
    for (const auto& r : j)
        out.push_back({r.at("edge").get<int>(), r.at("delta").get<int>(),
                       r.at("gamma").get<int>(), r.at("rung").get<int>()});
    return out;
}

Json split_tail_to_json(const SplitTail& tail) {
    Json levels = tail.level_prefix_len;
    Json reserved = Json::array();
    for (const auto& level : tail.reserved) {
        Json entries = Json::array();
        for (const auto& [delta, pair] : level)
            entries.push_back(Json{{"delta", delta}, {"colors", {pair.first, pair.second}}});
        reserved.push_back(entries);
    }
    return Json{{"levels", levels}, {"reserved", reserved}};
}

SplitTail split_tail_from_json(const Json& j) {
    SplitTail tail;
    tail.level_prefix_len = j.at("levels").get<std::vector<int>>();
    for (const auto& level : j.at("reserved")) {
        std::map<int, std::pair<int, int>> m;
        for (const auto& entry : level) {
            const auto& cols = entry.at("colors");
            m[entry.at("delta").get<int>()] = {cols.at(0).get<int>(), cols.at(1).get<int>()};
        }
        tail.reserved.push_back(std::move(m));
    }
    return tail;
}

Json main2a_to_json(const Main2aReport& rep) {
    return Json{{"rungs", rep.rungs},
                {"k", rep.k},
                {"delta", rep.delta},
                {"mu", rep.mu},
                {"t", rep.t},
                {"omega", rep.omega},
                {"graph_elementary", rep.graph_elementary},
                {"missing_tn", rep.missing_tn},
                {"tail_colors", rep.tail_colors},
                {"holds1", rep.holds1},
                {"tail_size", rep.tail_size},
                {"rhs2", rep.rhs2},
                {"holds2", rep.holds2},
                {"rhs3_num", rep.rhs3_num.to_string()},
                {"rhs3_den", rep.rhs3_den.to_string()},
                {"holds3", rep.holds3},
                {"restarts", rep.restarts},
                {"seed", rep.seed},
                {"sett_gamma", rep.sett_gamma},
                {"rung_prefix_len", rep.rung_prefix_len}};
}

namespace {

Json base_certificate(const Multigraph& g, const std::string& kind, Millis timeout) {
    auto [omega, witness] = density(g);
    ChiResult chi = exact_chromatic_index(g, timeout);
    GraphStats s = stats(g);
    Json cert;
    cert["schema"] = kCertSchema;
    cert["kind"] = kind;
    cert["graph"] = emit_graph(g);
    cert["stats"] = Json{{"n", s.n}, {"m", s.m}, {"delta", s.max_degree}, {"mu", s.multiplicity}};
    cert["omega"] = Json{{"value", omega},
                         {"witness", witness.vertices},
                         {"witness_edges", witness.induced_edges}};
    Json chij{{"value", chi.chi}, {"exact", chi.exact}};
    if (chi.witness) chij["coloring"] = coloring_to_json(*chi.witness);
    cert["chi"] = chij;
    return cert;
}

struct KTripleSetup {
    int k;
    Multigraph core;
    EdgeColoring coloring;
};

// criticality is part of the k-triple contract; certificates always record it
void add_criticality(Json& cert, const Multigraph& g, int k, Millis timeout) {
    CriticalityReport cr = criticality_check(g, k, timeout);
    cert["criticality"] =
        Json{{"k", cr.k}, {"is_critical", cr.is_critical}, {"per_edge_chi", cr.chi_minus_edge}};
}

} // namespace

Json make_instance_certificate(const Multigraph& g, Millis timeout) {
    return base_certificate(g, "instance", timeout);
}

Json make_tashkinov_certificate(const Multigraph& g, int edge, uint64_t seed, Millis timeout) {
    Json cert = base_certificate(g, "tashkinov", timeout);
    int k = cert["chi"]["value"].get<int>() - 1;
    add_criticality(cert, g, k, timeout);
    EdgeColoring col = make_k_triple_coloring(g, edge, k, seed);
    cert["ktriple"] =
        Json{{"k", k}, {"edge", edge}, {"seed", seed}, {"coloring", coloring_to_json(col)}};
    TreeSeq tree = build_maximal_tashkinov(g, col, edge, seed);
    cert["tree"] = tree_to_json(tree);
    auto elem = verify_elementary(col, tree.vertices);
    auto closure = closure_report(col, tree.vertices);
    cert["flags"] = Json{{"elementary", elem.elementary},
                         {"closed", closure.closed},
                         {"strongly_closed", closure.strongly_closed},
                         {"odd_order", tree.size() % 2 == 1}};
    cert["seeds"] = Json{{"taa", seed}};
    return cert;
}

Json make_ett_certificate(const Multigraph& g, int edge, int budget, uint64_t seed,
                          Millis timeout) {
    Json cert = base_certificate(g, "ett", timeout);
    int k = cert["chi"]["value"].get<int>() - 1;
    add_criticality(cert, g, k, timeout);
    MpResult mp = mp_search(g, edge, k, budget, seed);
    cert["ktriple"] = Json{{"k", k},
                           {"edge", edge},
                           {"seed", mp.witness.best_restart_seed},
                           {"coloring", coloring_to_json(mp.coloring)}};
    cert["tree"] = tree_to_json(mp.ett.tree);
    cert["ladder"] = mp.ett.ladder.prefix_len;
    cert["connecting"] = records_to_json(mp.ett.records);
    cert["r1"] = verify_r1(mp.coloring, mp.ett.tree, mp.ett.ladder, mp.ett.records).ok;
    auto elem = verify_elementary(mp.coloring, mp.ett.tree.vertices);
    auto closure = closure_report(mp.coloring, mp.ett.tree.vertices);
    cert["flags"] = Json{{"elementary", elem.elementary},
                         {"closed", closure.closed},
                         {"strongly_closed", closure.strongly_closed},
                         {"odd_order", mp.ett.tree.size() % 2 == 1}};
    cert["mp_witness"] = Json{{"budget", mp.witness.budget},
                              {"seed", mp.witness.seed},
                              {"best_profile", mp.witness.best_profile},
                              {"best_restart_seed", mp.witness.best_restart_seed}};
    return cert;
}

Json make_split_tail_certificate(const Multigraph& g, int edge, int budget, uint64_t seed,
                                 Millis timeout) {
    Json cert = base_certificate(g, "split-tail", timeout);
    int k = cert["chi"]["value"].get<int>() - 1;
    add_criticality(cert, g, k, timeout);
    MpResult mp = mp_search(g, edge, k, budget, seed);
    SplitTailResult st = build_split_tail(g, mp.coloring, mp.ett);
    cert["ktriple"] = Json{{"k", k},
                           {"edge", edge},
                           {"seed", mp.witness.best_restart_seed},
                           {"coloring", coloring_to_json(mp.coloring)}};
    cert["tree"] = tree_to_json(st.tree);
    cert["ladder"] = st.ladder.prefix_len;
    cert["connecting"] = records_to_json(st.records);
    cert["split_tail"] = split_tail_to_json(st.tail);
    if (st.refuted) {
        cert["violation"] = Json{{"check", "split-tail-feasibility"}, {"detail", st.refutation}};
        cert["r2"] = false;
        return cert;
    }
    cert["r1"] = verify_r1(mp.coloring, st.tree, st.ladder, st.records).ok;
    cert["r2"] = verify_r2(g, mp.coloring, st.tree, st.records, st.tail).ok;
    auto elem = verify_elementary(mp.coloring, st.tree.vertices);
    auto closure = closure_report(mp.coloring, st.tree.vertices);
    cert["flags"] = Json{{"elementary", elem.elementary},
                         {"closed", closure.closed},
                         {"strongly_closed", closure.strongly_closed},
                         {"odd_order", st.tree.size() % 2 == 1}};
    return cert;
}

Json make_main2a_certificate(const Multigraph& g, int edge, int restarts, uint64_t seed,
                             Millis timeout) {
    Json cert = base_certificate(g, "main2a", timeout);
    int k = cert["chi"]["value"].get<int>() - 1;
    add_criticality(cert, g, k, timeout);
    EdgeColoring col = make_k_triple_coloring(g, edge, k, seed);
    cert["ktriple"] =
        Json{{"k", k}, {"edge", edge}, {"seed", seed}, {"coloring", coloring_to_json(col)}};
    Main2aReport rep = measure_sett(g, col, edge, restarts, seed);
    cert["main2a"] = main2a_to_json(rep);
    return cert;
}

Json make_violation_certificate(const Multigraph& g, const std::string& check,
                                const std::string& detail, Millis timeout) {
    Json cert = base_certificate(g, "violation", timeout);
    cert["violation"] = Json{{"check", check}, {"detail", detail}};
    return cert;
}

// --- revalidation -------------------------------------------------------------

namespace {

const std::set<std::string> kAllowedKeys = {
    "schema",  "kind",   "graph",      "stats",      "omega",   "chi",
    "criticality", "ktriple", "tree", "ladder", "connecting", "split_tail",
    "flags",   "r1",     "r2",         "mp_witness", "main2a",  "verdicts",
    "violation", "timing", "seeds"};

struct Failure {
    std::string what;
};

#define CHECK_OR_FAIL(cond, name)                                                              \
    do {                                                                                       \
        if (!(cond)) throw Failure{name};                                                      \
    } while (0)

int ceil_div_int(int a, int b) { return (a + b - 1) / b; }

void revalidate_impl(const Json& cert, Millis timeout) {
    CHECK_OR_FAIL(cert.is_object(), "certificate is not an object");
    for (const auto& [key, value] : cert.items())
        CHECK_OR_FAIL(kAllowedKeys.count(key), "unknown field: " + key);
    CHECK_OR_FAIL(cert.contains("schema") && cert["schema"] == kCertSchema, "schema version");
    CHECK_OR_FAIL(cert.contains("graph") && cert.contains("kind"), "missing graph/kind");

    Multigraph g = parse_graph(cert["graph"].get<std::string>());
    GraphStats s = stats(g);
    if (cert.contains("stats")) {
        const Json& j = cert["stats"];
        CHECK_OR_FAIL(j.at("n") == s.n && j.at("m") == s.m && j.at("delta") == s.max_degree &&
                          j.at("mu") == s.multiplicity,
                      "stats mismatch");
    }
    if (cert.contains("omega")) {
        const Json& j = cert["omega"];
        auto [omega, witness] = density(g);
        CHECK_OR_FAIL(j.at("value").get<int>() == omega, "omega value mismatch");
        // the embedded witness must reproduce the value by the formula
        auto verts = j.at("witness").get<std::vector<int>>();
        CHECK_OR_FAIL(verts.size() >= 2, "omega witness too small");
        std::set<int> vs(verts.begin(), verts.end());
        int inside = 0;
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.endpoints(e);
            if (vs.count(u) && vs.count(v)) ++inside;
        }
        CHECK_OR_FAIL(inside == j.at("witness_edges").get<int>(), "omega witness edge count");
        CHECK_OR_FAIL(ceil_div_int(inside, static_cast<int>(vs.size()) / 2) == omega,
                      "omega witness does not attain the value");
    }
    int chi_value = -1;
    if (cert.contains("chi")) {
        const Json& j = cert["chi"];
        ChiResult chi = exact_chromatic_index(g, timeout);
        CHECK_OR_FAIL(chi.exact, "chi recomputation timed out");
        CHECK_OR_FAIL(j.at("exact").get<bool>(), "certificate chi not exact");
        CHECK_OR_FAIL(j.at("value").get<int>() == chi.chi, "chi value mismatch");
        chi_value = chi.chi;
        if (j.contains("coloring")) {
            EdgeColoring witness = coloring_from_json(g, j["coloring"]);
            CHECK_OR_FAIL(witness.k() == chi.chi, "chi witness palette size");
            CHECK_OR_FAIL(validate_proper(witness).ok, "chi witness not proper");
            for (int e = 0; e < g.edge_count(); ++e)
                CHECK_OR_FAIL(witness.colored(e), "chi witness leaves an edge uncolored");
        }
    }
    if (cert.contains("criticality")) {
        const Json& j = cert["criticality"];
        CriticalityReport cr = criticality_check(g, j.at("k").get<int>(), timeout);
        CHECK_OR_FAIL(cr.is_critical == j.at("is_critical").get<bool>(), "criticality flag");
        CHECK_OR_FAIL(cr.chi_minus_edge == j.at("per_edge_chi").get<std::vector<int>>(),
                      "per-edge chi mismatch");
    }
    std::optional<EdgeColoring> ktriple;
    int ktriple_edge = -1;
    if (cert.contains("ktriple")) {
        const Json& j = cert["ktriple"];
        ktriple = coloring_from_json(g, j.at("coloring"));
        ktriple_edge = j.at("edge").get<int>();
        CHECK_OR_FAIL(j.at("k").get<int>() == ktriple->k(), "ktriple k mismatch");
        CHECK_OR_FAIL(!ktriple->colored(ktriple_edge), "ktriple edge is colored");
        CHECK_OR_FAIL(ktriple->k() >= s.max_degree + 1, "ktriple k < Delta+1");
        for (int e = 0; e < g.edge_count(); ++e)
            CHECK_OR_FAIL(e == ktriple_edge || ktriple->colored(e),
                          "ktriple coloring misses an edge");
        CHECK_OR_FAIL(validate_proper(*ktriple).ok, "ktriple coloring not proper");
    }
    std::optional<TreeSeq> tree;
    std::vector<ConnectingRecord> records;
    if (cert.contains("connecting")) records = records_from_json(cert["connecting"]);
    if (cert.contains("tree")) {
        CHECK_OR_FAIL(ktriple.has_value(), "tree without ktriple");
        tree = tree_from_json(cert["tree"]);
        CHECK_OR_FAIL(!tree->edges.empty() && tree->edges[0] == ktriple_edge,
                      "tree does not start at the uncolored edge");
        auto def = verify_ett_definition(g, *ktriple, *tree, records);
        CHECK_OR_FAIL(def.ok, "tree fails the definition check: " + def.why);
    }
    Ladder ladder;
    if (cert.contains("ladder")) {
        CHECK_OR_FAIL(tree.has_value(), "ladder without tree");
        ladder.prefix_len = cert["ladder"].get<std::vector<int>>();
        CHECK_OR_FAIL(ladder.rungs() == static_cast<int>(records.size()),
                      "ladder/connecting size mismatch");
        for (int i = 0; i < ladder.rungs(); ++i) {
            int len = ladder.prefix_len[i];
            CHECK_OR_FAIL(len >= 2 && len < tree->size(), "ladder prefix length out of range");
            CHECK_OR_FAIL(tree->edges[len - 1] == records[i].edge,
                          "connecting edge not at its ladder position");
            CHECK_OR_FAIL(closure_report(*ktriple, tree->prefix_vertices(len)).closed,
                          "ladder prefix not closed");
        }
    }
    if (cert.contains("flags")) {
        CHECK_OR_FAIL(tree.has_value(), "flags without tree");
        const Json& j = cert["flags"];
        auto elem = verify_elementary(*ktriple, tree->vertices);
        auto closure = closure_report(*ktriple, tree->vertices);
        CHECK_OR_FAIL(j.at("elementary").get<bool>() == elem.elementary, "elementary flag");
        CHECK_OR_FAIL(j.at("closed").get<bool>() == closure.closed, "closed flag");
        CHECK_OR_FAIL(j.at("strongly_closed").get<bool>() == closure.strongly_closed,
                      "strongly_closed flag");
        CHECK_OR_FAIL(j.at("odd_order").get<bool>() == (tree->size() % 2 == 1), "odd_order flag");
    }
    if (cert.contains("r1")) {
        CHECK_OR_FAIL(tree.has_value() && cert.contains("ladder"), "r1 without ladder");
        CHECK_OR_FAIL(verify_r1(*ktriple, *tree, ladder, records).ok == cert["r1"].get<bool>(),
                      "r1 flag");
    }
    if (cert.contains("split_tail")) {
        CHECK_OR_FAIL(tree.has_value(), "split_tail without tree");
        SplitTail tail = split_tail_from_json(cert["split_tail"]);
        bool r2 = verify_r2(g, *ktriple, *tree, records, tail).ok;
        CHECK_OR_FAIL(cert.contains("r2") && cert["r2"].get<bool>() == r2, "r2 flag");
    }
    if (cert.contains("main2a")) {
        CHECK_OR_FAIL(ktriple.has_value(), "main2a without ktriple");
        const Json& j = cert["main2a"];
        CHECK_OR_FAIL(j.at("k").get<int>() == ktriple->k(), "main2a k");
        CHECK_OR_FAIL(j.at("delta").get<int>() == s.max_degree, "main2a delta");
        CHECK_OR_FAIL(j.at("mu").get<int>() == s.multiplicity, "main2a mu");
        CHECK_OR_FAIL(j.at("t").get<int>() == ktriple->k() - s.max_degree, "main2a t");
        auto [omega, w] = density(g);
        CHECK_OR_FAIL(j.at("omega").get<int>() == omega, "main2a omega");
        CHECK_OR_FAIL(j.at("graph_elementary").get<bool>() == (omega == ktriple->k() + 1),
                      "main2a hypothesis flag");
        int sM = static_cast<int>(j.at("missing_tn").size());
        auto [num, den] = main2a_rhs3(ktriple->k() - s.max_degree, s.multiplicity, sM);
        CHECK_OR_FAIL(j.at("rhs3_num").get<std::string>() == num.to_string(), "main2a rhs3 num");
        CHECK_OR_FAIL(j.at("rhs3_den").get<std::string>() == den.to_string(), "main2a rhs3 den");
        CHECK_OR_FAIL(j.at("rhs2").get<int>() == 2 * sM + 2, "main2a rhs2");
        int tail_size = j.at("tail_size").get<int>();
        CHECK_OR_FAIL(j.at("holds2").get<bool>() == (tail_size >= 2 * sM + 2), "main2a holds2");
        BigNat lhs = den;
        lhs.mul_small(static_cast<uint64_t>(tail_size));
        CHECK_OR_FAIL(j.at("holds3").get<bool>() == (lhs > num), "main2a holds3");
        // holds1 is a set inclusion over the embedded color lists
        std::set<int> tailc;
        for (int col : j.at("tail_colors").get<std::vector<int>>()) tailc.insert(col);
        bool holds1 = true;
        for (int col : j.at("missing_tn").get<std::vector<int>>())
            if (!tailc.count(col)) holds1 = false;
        CHECK_OR_FAIL(j.at("holds1").get<bool>() == holds1, "main2a holds1");
    }
    if (cert.contains("violation")) {
        const Json& j = cert["violation"];
        CHECK_OR_FAIL(j.is_object() && j.contains("check"), "malformed violation");
        if (j["check"] == "goldberg") {
            auto [omega, w] = density(g);
            CHECK_OR_FAIL(chi_value >= s.max_degree + 2 && chi_value != omega,
                          "goldberg violation does not reproduce");
        }
    }
}

} // namespace

RevalidationResult revalidate_certificate(const Json& cert, Millis timeout) {
    try {
        revalidate_impl(cert, timeout);
        return {};
    } catch (const Failure& f) {
        return {false, f.what};
    } catch (const std::exception& ex) {
        return {false, std::string("error: ") + ex.what()};
    }
}

} // namespace ecl
