#include "sublin/cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "sublin/exact.hpp"
#include "sublin/generators.hpp"
#include "sublin/report.hpp"

namespace sublin::cli {

Graph load_instance(const RunConfig& cfg, std::uint64_t seed, std::optional<std::size_t> n) {
    if (!cfg.graph_file.empty()) return load_graph(cfg.graph_file, cfg.list_order, Seed(seed).derive("list-order"));
    std::string text = cfg.instance;
    if (n) {
        for (auto pos = text.find("$n"); pos != std::string::npos; pos = text.find("$n"))
            text.replace(pos, 2, std::to_string(*n));
    }
    if (text.find("$n") != std::string::npos) throw UsageError("instance uses $n but no size was given");
    return generate(GeneratorSpec::parse(text), Seed(seed), cfg.list_order);
}

double loglog_slope(const std::vector<std::pair<double, double>>& points) {
    std::vector<std::pair<double, double>> pts;
    for (auto [x, y] : points)
        if (x > 0 && y > 0) pts.emplace_back(std::log(x), std::log(y));
    if (pts.size() < 2) return std::numeric_limits<double>::quiet_NaN();
    double mx = 0, my = 0;
    for (auto [x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx <= 1e-12) return std::numeric_limits<double>::quiet_NaN();
    return sxy / sxx;
}

namespace {

std::optional<std::size_t> exact_mu(const Graph& g, std::size_t cap) {
    if (g.n() > cap) return std::nullopt;
    return max_matching_exact(g, cap).size;
}

struct Execution {
    PipelineResult run;
    std::optional<DichotomyResult> dichotomy;
};

Execution execute(const Graph& g, const RunConfig& cfg, const PipelineConfig& pc, QueryCounters& qc) {
    switch (cfg.task) {
        case Task::Dichotomy: {
            auto d = run_dichotomy(g, cfg.mode, pc);
            qc = d.run.report.queries;
            PipelineResult run = d.run;
            return {std::move(run), std::move(d)};
        }
        case Task::Plugin: {
            MatrixOracle oracle(g, qc);
            return {estimate_with_plugin(oracle, exact_plugin(), pc), std::nullopt};
        }
        case Task::Pipeline: break;
    }
    return {run_pipeline(g, cfg.mode, pc, qc), std::nullopt};
}

CheckResult check(std::string name, bool ok, std::string detail = "") {
    return {std::move(name), ok, std::move(detail)};
}

std::string fmt(double x) {
    std::ostringstream s;
    s << x;
    return s.str();
}

}  // namespace

std::vector<CheckResult> verify_run(const Graph& g, const RunConfig& cfg, const PipelineResult& run) {
    std::vector<CheckResult> out;
    const auto& r = run.report;
    auto mu = exact_mu(g, cfg.exact_cap);
    if (mu) {
        double m = static_cast<double>(*mu);
        out.push_back(check("interval", r.lower <= m + 1e-9 && m <= r.upper + 1e-9,
                            "mu=" + fmt(m) + " in [" + fmt(r.lower) + ", " + fmt(r.upper) + "]"));
    }
    if (!run.artifacts || !run.artifacts->h) return out;
    const Edbs& h = *run.artifacts->h;
    out.push_back(check("edbs-no-overfull", h.overfull_edges().empty()));
    long bad = first_potential_violation(h.n(), h.params(), h.op_log());
    out.push_back(check("potential-increase", bad < 0, bad < 0 ? "" : "op " + std::to_string(bad)));
    if (mu) {
        double beta = h.params().beta;
        double bound = 3.0 * beta * beta * static_cast<double>(*mu) + beta * beta;
        out.push_back(check("op-bound", static_cast<double>(h.op_log().size()) <= bound,
                            std::to_string(h.op_log().size()) + " <= " + fmt(bound)));
        auto hu = h.edges();
        auto u = underfull_edges(g, h);
        hu.insert(hu.end(), u.begin(), u.end());
        auto mu_hu = max_matching_exact(graph_from_edges(g.n(), hu), cfg.exact_cap).size;
        out.push_back(check("sparsifier",
                            static_cast<double>(*mu) <= (1.5 + h.params().epsilon) * static_cast<double>(mu_hu) + 1e-9,
                            "mu=" + std::to_string(*mu) + " mu(H+U)=" + std::to_string(mu_hu)));
    }
    const auto& small = run.artifacts->small;
    double bound = SmallSubgraph::degree_bound(h.params(), run.artifacts->delta_star, r.gamma);
    std::size_t worst = 0;
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (!small.contains(static_cast<Vertex>(v))) continue;
        std::size_t deg = 0;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
            if (small.contains(w) && (h.contains(static_cast<Vertex>(v), w) || h.is_underfull(static_cast<Vertex>(v), w)))
                ++deg;
        worst = std::max(worst, deg);
    }
    out.push_back(check("small-degree-bound", static_cast<double>(worst) <= bound,
                        std::to_string(worst) + " <= " + fmt(bound)));
    return out;
}

std::vector<CheckResult> verification_battery(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    std::vector<std::pair<std::string, Graph>> instances;
    const std::uint64_t seed = cfg.seeds.empty() ? 1 : cfg.seeds.front();
    if (!cfg.graph_file.empty()) {
        instances.emplace_back(cfg.graph_file, load_instance(cfg, seed));
    } else {
        for (const char* spec : {"petersen", "complete:n=6", "path:n=9", "cycle:n=11", "star:leaves=7",
                                 "erdos-renyi:n=40,p=0.12", "d-regular:n=30,d=3",
                                 "random-bipartite:left=15,right=15,p=0.2"})
            instances.emplace_back(spec, generate(GeneratorSpec::parse(spec), Seed(seed)));
    }

    for (auto& [name, g] : instances) {
        auto mu = max_matching_exact(g, cfg.exact_cap);
        out.push_back(check(name + ": exact-matching-certified", !has_augmenting_path(g, mu.mate)));

        // Small beta so that deletions actually occur.
        EdbsParams small_beta(0.25, 8);
        QueryCounters qc;
        ListOracle list(g, qc);
        if (g.m() > 0) {
            auto table = build_degree_table(list);
            ListEdgeSampler sampler(list, table);
            auto rng = Seed(seed).derive("battery-edbs").engine();
            SchematicParams sp{static_cast<double>(g.m()), 1.0, 1.0, 0.0, 0.05};
            auto built = build_edbs(g.n(), small_beta, sp, [&] { return sampler.sample(rng); });
            Edbs& h = built.h;
            if (cfg.inject_fault) {
                for (const auto& e : g.edges())
                    if (!h.contains(e.u, e.v) && !h.is_underfull(e.u, e.v)) {
                        h.force_insert(e.u, e.v);
                        break;
                    }
            }
            long bad = first_potential_violation(g.n(), small_beta, h.op_log());
            out.push_back(check(name + ": potential-increase", bad < 0, bad < 0 ? "" : "op " + std::to_string(bad)));
            out.push_back(check(name + ": edbs-no-overfull", h.overfull_edges().empty()));
        }

        GraphView view(g);
        const int k = 3;
        OracleOptions opt;
        opt.component_fallback = false;
        MatchingOracle oracle(view, Seed(seed).derive("battery-oracle"), k, opt);
        auto offline = offline_layered(g, k, Seed(seed).derive("battery-oracle"));
        std::vector<Edge> local;
        for (const auto& e : g.edges())
            if (oracle.in_matching(e.u, e.v)) local.push_back(e);
        out.push_back(check(name + ": layered-oracle-equivalence", local == offline.matchings[k]));

        RankSource ranks(Seed(seed).derive("battery-mis"), 0);
        VertexMisOracle mis(view, ranks);
        auto expected = offline_greedy_mis(g, ranks);
        bool same = true;
        for (std::size_t v = 0; v < g.n(); ++v) same = same && (mis.member(static_cast<Vertex>(v)) == (expected[v] != 0));
        out.push_back(check(name + ": mis-equivalence", same));
    }

    Graph ten = generate(GeneratorSpec::parse("erdos-renyi:n=8,p=0.4"), Seed(seed));
    if (ten.m() >= 2) {
        QueryCounters qc;
        ListOracle list(ten, qc);
        auto table = build_degree_table(list);
        ListEdgeSampler sampler(list, table);
        auto rng = Seed(seed).derive("battery-chi").engine();
        std::map<Edge, std::uint64_t> counts;
        for (const auto& e : ten.edges()) counts[e] = 0;
        for (int i = 0; i < 20 * static_cast<int>(ten.m()) * 10; ++i) ++counts[sampler.sample(rng)];
        std::vector<std::uint64_t> cells;
        for (auto& [e, c] : counts) cells.push_back(c);
        double p = chi_square_uniform(cells);
        out.push_back(check("list-sampler-uniform", p > 1e-4, "p=" + fmt(p)));
    }
    return out;
}

SweepResult run_sweep(const RunConfig& cfg) {
    if (cfg.seeds.empty()) throw UsageError("sweep: empty seed list");
    if (cfg.sizes.empty()) throw UsageError("sweep: no sizes given");
    struct Job {
        std::size_t n;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (auto n : cfg.sizes)
        for (auto s : cfg.seeds) jobs.push_back({n, s});
    std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
        return a.n != b.n ? a.n < b.n : a.seed < b.seed;
    });

    SweepResult result;
    result.rows.resize(jobs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                Graph g = load_instance(cfg, jobs[i].seed, jobs[i].n);
                PipelineConfig pc = cfg.pipeline;
                pc.seed = Seed(jobs[i].seed);
                QueryCounters qc;
                auto run = execute(g, cfg, pc, qc).run;
                auto& row = result.rows[i];
                row.n = jobs[i].n;
                row.seed = jobs[i].seed;
                row.m = g.m();
                row.mu_exact = exact_mu(g, cfg.exact_cap);
                row.report = std::move(run.report);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, jobs.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    std::vector<std::pair<double, double>> pts;
    for (const auto& row : result.rows)
        pts.emplace_back(static_cast<double>(row.n), static_cast<double>(row.report.queries.total()));
    result.slope = loglog_slope(pts);
    return result;
}

namespace {

// Options shared by every subcommand; each is applied only when given.
struct CommonFlags {
    std::string config;
    std::map<std::string, std::string> values;

    void add(CLI::App* app) {
        app->add_option("--config", config, "key=value config file; flags override it");
        for (const auto& key : config_keys()) {
            std::string flag = "--" + key;
            std::replace(flag.begin(), flag.end(), '_', '-');
            if (key == "verify") {
                app->add_flag_callback(flag, [this] { values["verify"] = "true"; }, "check the run against ground truth");
                continue;
            }
            app->add_option_function<std::string>(
                flag, [this, key](const std::string& v) { values[key] = v; }, "sets " + key);
        }
    }

    RunConfig resolve() const {
        RunConfig cfg;
        apply_environment(cfg);
        if (!config.empty()) load_config_file(cfg, config);
        for (const auto& [k, v] : values) apply_setting(cfg, k, v);
        return cfg;
    }
};

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
    if (path.empty() || path == "-") {
        fallback << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

nlohmann::json echo(const RunConfig& cfg) {
    const auto& p = cfg.pipeline;
    return {{"mode", mode_name(cfg)},
            {"access", to_string(cfg.mode)},
            {"instance", cfg.graph_file.empty() ? cfg.instance : std::string()},
            {"graph", cfg.graph_file},
            {"list_order", cfg.list_order == ListOrder::Global ? "global" : "random"},
            {"gamma_c", p.gamma_c},
            {"c_beta", p.c_beta},
            {"node_cap", p.oracle.node_cap},
            {"fallback", p.oracle.component_fallback},
            {"memo", p.oracle.memo == MemoScope::Run ? "run" : "query"},
            {"verify", cfg.verify},
            {"exact_cap", cfg.exact_cap},
            {"seeds", cfg.seeds},
            {"sizes", cfg.sizes}};
}

int report_checks(const std::vector<CheckResult>& checks, std::ostream& out) {
    bool all = true;
    for (const auto& c : checks) {
        out << (c.ok ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        out << '\n';
        all = all && c.ok;
    }
    return all ? kOk : kVerificationFailed;
}

int cmd_generate(const RunConfig& cfg, const std::string& out_path, std::ostream& out) {
    Graph g = load_instance(cfg, cfg.seeds.empty() ? 1 : cfg.seeds.front());
    std::ostringstream text;
    write_graph(text, g);
    write_text(out_path, text.str(), out);
    return kOk;
}

int cmd_estimate(RunConfig cfg, std::ostream& out, std::ostream& err) {
    if (cfg.seeds.empty()) throw UsageError("estimate: no seed");
    const std::uint64_t seed = cfg.seeds.front();
    Graph g = load_instance(cfg, seed);
    cfg.pipeline.seed = Seed(seed);
    cfg.pipeline.keep_artifacts = cfg.verify;
    QueryCounters qc;
    auto [run, dichotomy] = execute(g, cfg, cfg.pipeline, qc);
    auto j = to_json(run.report);
    j["run"] = echo(cfg);
    if (dichotomy) {
        j["dichotomy"] = {{"branch", dichotomy->witness_returned ? "witness" : "value"},
                          {"mu_h", dichotomy->mu_h},
                          {"proxy", dichotomy->proxy},
                          {"witness_size", dichotomy->witness.size()},
                          {"value", dichotomy->value}};
    }
    int code = kOk;
    if (cfg.verify) {
        auto checks = verify_run(g, cfg, run);
        nlohmann::json jc = nlohmann::json::array();
        for (const auto& c : checks) jc.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        j["verification"] = jc;
        code = report_checks(checks, err);
    }
    write_text(cfg.json_out, j.dump(2) + "\n", out);
    if (!cfg.csv_out.empty())
        write_text(cfg.csv_out, csv_header() + "\n" + csv_row(run.report, g.m(), exact_mu(g, cfg.exact_cap)) + "\n", out);
    return code;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto result = run_sweep(cfg);
    std::ostringstream csv;
    csv << csv_header() << '\n';
    for (const auto& row : result.rows) csv << csv_row(row.report, row.m, row.mu_exact) << '\n';
    write_text(cfg.csv_out, csv.str(), out);
    nlohmann::json summary = {{"schema", kReportSchema},
                              {"run", echo(cfg)},
                              {"slope", std::isnan(result.slope) ? nlohmann::json(nullptr) : nlohmann::json(result.slope)}};
    if (!cfg.json_out.empty()) write_text(cfg.json_out, summary.dump(2) + "\n", out);
    err << "slope " << (std::isnan(result.slope) ? std::string("nan") : fmt(result.slope)) << '\n';
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) { return report_checks(verification_battery(cfg), out); }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sublinear maximum matching size estimation"};
    app.require_subcommand(1);

    CommonFlags gen_flags, est_flags, sweep_flags, verify_flags;
    std::string graph_out;
    bool inject = false;

    auto* gen = app.add_subcommand("generate", "write a generated instance as a graph file");
    gen_flags.add(gen);
    gen->add_option("--out", graph_out, "output path (default stdout)");

    auto* est = app.add_subcommand("estimate", "run one pipeline and print a JSON report");
    est_flags.add(est);

    auto* sweep = app.add_subcommand("sweep", "run a grid of sizes and seeds, print CSV");
    sweep_flags.add(sweep);

    auto* ver = app.add_subcommand("verify", "run the property battery");
    verify_flags.add(ver);
    ver->add_flag("--inject-fault", inject, "corrupt the subgraph to exercise failure reporting");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (gen->parsed()) return cmd_generate(gen_flags.resolve(), graph_out, out);
        if (est->parsed()) return cmd_estimate(est_flags.resolve(), out, err);
        if (sweep->parsed()) return cmd_sweep(sweep_flags.resolve(), out, err);
        if (ver->parsed()) {
            auto cfg = verify_flags.resolve();
            cfg.inject_fault = inject;
            return cmd_verify(cfg, out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kUsageError;
}

}  // namespace sublin::cli
