// eclab: multigraph edge-coloring laboratory CLI.
//
// Subcommands: gen, omega, chi, critical, tashkinov, ett, split-tail,
// measure-main2a, bounds, verify, revalidate.
// Exit codes: 0 pass, 1 violation found, 2 usage/parse error, 3 timeout.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ecl/bounds.hpp"
#include "ecl/campaign.hpp"
#include "ecl/certificate.hpp"
#include "ecl/ett.hpp"
#include "ecl/rng.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

struct CommonOpts {
    uint64_t seed = 0;
    int jobs = 1;
    long long timeout_ms = 0;
    std::string format = "text";
    std::string out;

    ecl::Millis timeout() const { return ecl::Millis(timeout_ms); }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--seed", o.seed, "deterministic seed");
    cmd->add_option("--jobs", o.jobs, "worker threads");
    cmd->add_option("--timeout-ms", o.timeout_ms, "per-instance timeout (0 = none)");
    cmd->add_option("--format", o.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", o.out, "output path (default stdout)");
}

int emit_certificate(const ecl::Json& cert, const CommonOpts& opts) {
    write_output(opts.out, cert.dump(2));
    bool violated = cert.contains("violation") && !cert["violation"].is_null();
    return violated ? kExitViolation : kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multigraph edge-coloring laboratory"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate multigraphs");
    std::string family = "fat-cycle";
    int gen_n = 3, gen_mu = 2, gen_edges = 0, gen_count = 1;
    std::string mult_csv;
    CommonOpts gen_opts;
    gen->add_option("--family", family, "fat-cycle|random|enumerate")
        ->check(CLI::IsMember({"fat-cycle", "random", "enumerate"}));
    gen->add_option("--n", gen_n, "vertex count / bound");
    gen->add_option("--mu", gen_mu, "multiplicity cap");
    gen->add_option("--mult", mult_csv, "fat-cycle multiplicities, comma separated");
    gen->add_option("--edges", gen_edges, "random edge budget");
    gen->add_option("--count", gen_count, "number of random graphs");
    add_common(gen, gen_opts);

    // graph-file subcommands
    auto make_graph_cmd = [&](const char* name, const char* desc, std::string& path,
                              CommonOpts& opts) {
        auto* cmd = app.add_subcommand(name, desc);
        cmd->add_option("graph", path, "graph file")->required();
        add_common(cmd, opts);
        return cmd;
    };
    std::string omega_path, chi_path, crit_path, tash_path, ett_path, split_path, m2a_path;
    CommonOpts omega_opts, chi_opts, crit_opts, tash_opts, ett_opts, split_opts, m2a_opts;
    make_graph_cmd("omega", "exact density with witness", omega_path, omega_opts);
    make_graph_cmd("chi", "exact chromatic index", chi_path, chi_opts);
    auto* crit = make_graph_cmd("critical", "edge criticality report", crit_path, crit_opts);
    int crit_k = -1;
    crit->add_option("--k", crit_k, "k to test (default chi'-1)");
    auto* tash =
        make_graph_cmd("tashkinov", "k-triple + maximal Tashkinov tree", tash_path, tash_opts);
    int tash_edge = 0;
    tash->add_option("--edge", tash_edge, "uncolored edge id");
    auto* ett = make_graph_cmd("ett", "ETT via restart search", ett_path, ett_opts);
    int ett_edge = 0, ett_budget = 8;
    ett->add_option("--edge", ett_edge, "uncolored edge id");
    ett->add_option("--budget", ett_budget, "restart budget");
    auto* split = make_graph_cmd("split-tail", "Statement B split-tail construction", split_path,
                                 split_opts);
    int split_edge = 0, split_budget = 8;
    split->add_option("--edge", split_edge, "uncolored edge id");
    split->add_option("--budget", split_budget, "restart budget");
    auto* m2a = make_graph_cmd("measure-main2a", "SETT tail-growth measurements", m2a_path,
                               m2a_opts);
    int m2a_edge = 0, m2a_restarts = 8;
    m2a->add_option("--edge", m2a_edge, "uncolored edge id");
    m2a->add_option("--restarts", m2a_restarts, "SETT restart budget");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form guarantee classifiers");
    int b_delta = 0, b_mu = 0, b_chi = 0, b_n = -1;
    CommonOpts bounds_opts;
    bounds_cmd->add_option("--delta", b_delta)->required();
    bounds_cmd->add_option("--mu", b_mu)->required();
    bounds_cmd->add_option("--chi", b_chi)->required();
    bounds_cmd->add_option("--n", b_n, "optional |V|");
    add_common(bounds_cmd, bounds_opts);

    // verify (campaign)
    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    CommonOpts verify_opts;
    int v_enum_n = 0, v_enum_mu = 0;
    int v_rand_count = 0, v_rand_n = 6, v_rand_mu = 3, v_rand_budget = 14;
    int v_ktriples = 2;
    std::vector<std::string> v_graphs;
    std::string v_checks = "all";
    verify->add_option("--enumerate-n", v_enum_n, "exhaustive corpus bound");
    verify->add_option("--enumerate-mu", v_enum_mu, "exhaustive corpus multiplicity cap");
    verify->add_option("--random-count", v_rand_count);
    verify->add_option("--random-nmax", v_rand_n);
    verify->add_option("--random-mumax", v_rand_mu);
    verify->add_option("--random-budget", v_rand_budget);
    verify->add_option("--ktriples-per-core", v_ktriples);
    verify->add_option("--graph", v_graphs, "explicit graph file (repeatable)");
    verify->add_option("--checks", v_checks, "comma list or 'all'");
    add_common(verify, verify_opts);

    // revalidate
    auto* reval = app.add_subcommand("revalidate", "re-check a certificate");
    std::string reval_path;
    CommonOpts reval_opts;
    reval->add_option("certificate", reval_path, "certificate json")->required();
    add_common(reval, reval_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            std::string out;
            if (family == "fat-cycle") {
                std::vector<int> mult;
                if (mult_csv.empty()) mult.assign(gen_n, gen_mu);
                else {
                    std::istringstream ss(mult_csv);
                    std::string tok;
                    while (std::getline(ss, tok, ',')) mult.push_back(std::stoi(tok));
                }
                out = ecl::emit_graph(ecl::fat_cycle(gen_n, mult));
            } else if (family == "random") {
                int budget = gen_edges > 0 ? gen_edges : gen_n + 2;
                for (int i = 0; i < gen_count; ++i) {
                    out += "# random " + std::to_string(i) + "\n";
                    out += ecl::emit_graph(ecl::random_multigraph(
                        gen_n, gen_mu, budget, ecl::mix_seed(gen_opts.seed, i)));
                }
            } else {
                auto graphs = ecl::enumerate_all(gen_n, gen_mu);
                for (size_t i = 0; i < graphs.size(); ++i) {
                    out += "# enumerated " + std::to_string(i) + "\n";
                    out += ecl::emit_graph(graphs[i]);
                }
            }
            write_output(gen_opts.out, out);
            return kExitPass;
        }
        if (app.got_subcommand("omega")) {
            ecl::Multigraph g = ecl::parse_graph(read_file(omega_path));
            auto [value, witness] = ecl::density(g);
            if (omega_opts.format == "json") {
                ecl::Json j{{"omega", value},
                            {"witness", witness.vertices},
                            {"witness_edges", witness.induced_edges}};
                write_output(omega_opts.out, j.dump(2));
            } else {
                std::ostringstream ss;
                ss << "omega = " << value << "  witness = {";
                for (size_t i = 0; i < witness.vertices.size(); ++i)
                    ss << (i ? "," : "") << witness.vertices[i];
                ss << "} with " << witness.induced_edges << " edges";
                write_output(omega_opts.out, ss.str());
            }
            return kExitPass;
        }
        if (app.got_subcommand("chi")) {
            ecl::Multigraph g = ecl::parse_graph(read_file(chi_path));
            ecl::ChiResult r = ecl::exact_chromatic_index(g, chi_opts.timeout());
            if (chi_opts.format == "json") {
                ecl::Json j{{"exact", r.exact}, {"lower", r.lower}, {"upper", r.upper}};
                if (r.exact) j["chi"] = r.chi;
                write_output(chi_opts.out, j.dump(2));
            } else if (r.exact) {
                write_output(chi_opts.out, "chi' = " + std::to_string(r.chi));
            } else {
                write_output(chi_opts.out, "inexact: chi' in [" + std::to_string(r.lower) + ", " +
                                               std::to_string(r.upper) + "]");
            }
            return r.exact ? kExitPass : kExitTimeout;
        }
        if (app.got_subcommand("critical")) {
            ecl::Multigraph g = ecl::parse_graph(read_file(crit_path));
            int k = crit_k;
            if (k < 0) k = ecl::exact_chromatic_index(g, crit_opts.timeout()).chi - 1;
            ecl::CriticalityReport r = ecl::criticality_check(g, k, crit_opts.timeout());
            ecl::Json j{{"k", r.k},
                        {"chi", r.chi},
                        {"is_critical", r.is_critical},
                        {"per_edge_chi", r.chi_minus_edge}};
            write_output(crit_opts.out, crit_opts.format == "json"
                                            ? j.dump(2)
                                            : std::string("critical(k=") + std::to_string(k) +
                                                  ") = " + (r.is_critical ? "yes" : "no"));
            return kExitPass;
        }
        if (app.got_subcommand("tashkinov")) {
            ecl::Multigraph g = ecl::parse_graph(read_file(tash_path));
            return emit_certificate(
                ecl::make_tashkinov_certificate(g, tash_edge, tash_opts.seed,
                                                tash_opts.timeout()),
                tash_opts);
        }
        if (app.got_subcommand("ett")) {
            ecl::Multigraph g = ecl::parse_graph(read_file(ett_path));
            return emit_certificate(
                ecl::make_ett_certificate(g, ett_edge, ett_budget, ett_opts.seed,
                                          ett_opts.timeout()),
                ett_opts);
        }
        if (app.got_subcommand("split-tail")) {
            ecl::Multigraph g = ecl::parse_graph(read_file(split_path));
            return emit_certificate(
                ecl::make_split_tail_certificate(g, split_edge, split_budget, split_opts.seed,
                                                 split_opts.timeout()),
                split_opts);
        }
        if (app.got_subcommand("measure-main2a")) {
            ecl::Multigraph g = ecl::parse_graph(read_file(m2a_path));
            return emit_certificate(
                ecl::make_main2a_certificate(g, m2a_edge, m2a_restarts, m2a_opts.seed,
                                             m2a_opts.timeout()),
                m2a_opts);
        }
        if (bounds_cmd->parsed()) {
            ecl::BoundInputs in;
            in.delta = b_delta;
            in.mu = b_mu;
            in.chi = b_chi;
            if (b_n >= 0) in.n = b_n;
            auto verdicts = ecl::guarantee_classifier(in);
            if (bounds_opts.format == "json") {
                ecl::Json arr = ecl::Json::array();
                for (const auto& v : verdicts) {
                    ecl::Json j{{"criterion", v.criterion},
                                {"applicable", v.applicable},
                                {"guaranteed", v.guaranteed},
                                {"note", v.note}};
                    if (v.threshold_den != 1 || v.threshold_num != 0)
                        j["threshold"] = {{"num", v.threshold_num}, {"den", v.threshold_den}};
                    arr.push_back(j);
                }
                write_output(bounds_opts.out,
                             ecl::Json{{"verdicts", arr},
                                       {"any_guaranteed", ecl::any_guaranteed(verdicts)}}
                                 .dump(2));
            } else {
                std::ostringstream ss;
                for (const auto& v : verdicts) {
                    ss << v.criterion << ": "
                       << (!v.applicable ? "inapplicable"
                                         : (v.guaranteed ? "guaranteed" : "no"))
                       << "  (" << v.note << ")\n";
                }
                write_output(bounds_opts.out, ss.str());
            }
            return kExitPass;
        }
        if (verify->parsed()) {
            ecl::CorpusSpec corpus;
            corpus.enumerate_n = v_enum_n;
            corpus.enumerate_mu = v_enum_mu;
            corpus.random.count = v_rand_count;
            corpus.random.n_max = v_rand_n;
            corpus.random.mu_max = v_rand_mu;
            corpus.random.budget_max = v_rand_budget;
            corpus.ktriples_per_core = v_ktriples;
            for (const auto& path : v_graphs)
                corpus.extra.push_back(ecl::parse_graph(read_file(path)));
            auto checks = ecl::parse_checks(v_checks);
            ecl::CampaignReport report = ecl::run_campaign(corpus, checks, verify_opts.jobs,
                                                           verify_opts.seed,
                                                           verify_opts.timeout());
            write_output(verify_opts.out, report.to_json().dump(2));
            std::cerr << "elapsed: " << report.elapsed_seconds << "s\n";
            bool violated =
                !report.goldberg_violations.empty() || !report.theorem_violations.empty();
            if (violated) return kExitViolation;
            if (!report.timeouts.empty()) return kExitTimeout;
            return kExitPass;
        }
        if (reval->parsed()) {
            ecl::Json cert = ecl::Json::parse(read_file(reval_path));
            ecl::RevalidationResult r =
                ecl::revalidate_certificate(cert, reval_opts.timeout());
            if (r.ok) {
                write_output(reval_opts.out, "certificate ok");
                return kExitPass;
            }
            write_output(reval_opts.out, "certificate INVALID: " + r.first_failure);
            return kExitViolation;
        }
    } catch (const ecl::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ecl::OracleTimeout& e) {
        std::cerr << "timeout: " << e.what() << "\n";
        return kExitTimeout;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
