#include "sublin/pipelines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "sublin/exact.hpp"

namespace sublin {

std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::Matrix: return "matrix";
        case Mode::List: return "list";
        case Mode::Hybrid: return "hybrid";
    }
    return "?";
}

Mode parse_mode(const std::string& text) {
    if (text == "matrix") return Mode::Matrix;
    if (text == "list") return Mode::List;
    if (text == "hybrid") return Mode::Hybrid;
    throw UsageError("unknown mode: " + text);
}

double PipelineConfig::gamma_value() const { return gamma.value_or(gamma_c * epsilon * epsilon); }

EdbsParams PipelineConfig::edbs_params() const {
    return beta ? EdbsParams(epsilon, *beta) : EdbsParams::from_epsilon(epsilon, c_beta);
}

void PipelineConfig::validate() const {
    if (!(epsilon > 0.0 && epsilon <= 0.25)) throw UsageError("epsilon must be in (0, 1/4]");
    double g = gamma_value();
    if (!(g > 0.0 && g < 1.0)) throw UsageError("gamma must be in (0, 1)");
    if (!(scale > 0.0) || !(final_scale() > 0.0)) throw UsageError("scale must be positive");
    edbs_params();
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Records per-step query counts and wall time.
class StepTimer {
public:
    StepTimer(EstimateReport& r, QueryCounters& c) : r_(r), c_(c), start_(Clock::now()) {}

    template <class F>
    auto step(const std::string& name, F&& body) {
        QueryCounters before = c_;
        auto t0 = Clock::now();
        if constexpr (std::is_void_v<decltype(body())>) {
            body();
            r_.steps.push_back({name, c_ - before, ms_since(t0)});
        } else {
            auto out = body();
            r_.steps.push_back({name, c_ - before, ms_since(t0)});
            return out;
        }
    }

    void finish() {
        r_.queries = QueryCounters{};
        for (const auto& s : r_.steps) {
            r_.queries.matrix += s.queries.matrix;
            r_.queries.list += s.queries.list;
        }
        r_.ms = ms_since(start_);
    }

private:
    EstimateReport& r_;
    QueryCounters& c_;
    Clock::time_point start_;
};

EstimateReport base_report(Mode mode, std::size_t n, const PipelineConfig& cfg) {
    cfg.validate();
    EstimateReport r;
    r.mode = mode;
    r.n = n;
    r.epsilon = cfg.epsilon;
    r.gamma = cfg.gamma_value();
    r.scale = cfg.scale;
    r.estimator_scale = cfg.final_scale();
    r.beta = cfg.edbs_params().beta;
    r.seed = cfg.seed.value();
    return r;
}

double effective_degree(const EdbsParams& p, double delta_star, double gamma, std::size_t members) {
    double bound = SmallSubgraph::degree_bound(p, delta_star, gamma);
    return std::min(bound, members > 0 ? static_cast<double>(members - 1) : 0.0);
}

void finish_small_step(EstimateReport& r, SmallSubgraph& small, const SmallVertexSet& vs, double delta_star,
                       const PipelineConfig& cfg, StepTimer& timer) {
    auto members = vs.vertices();
    r.small_vertices = members.size();
    double delta_eff = effective_degree(cfg.edbs_params(), delta_star, r.gamma, members.size());
    auto est = timer.step("estimate", [&] {
        return estimate_mu_yoshida(small, members, delta_eff, cfg.epsilon, cfg.final_scale(),
                                   cfg.seed.derive("estimate"), cfg.oracle);
    });
    r.alpha = est.mu_tilde;
    r.estimator_samples = est.samples;
    r.oracle_levels = est.k;
}

void keep(PipelineResult& out, const PipelineConfig& cfg, const Edbs& h, const SmallVertexSet& vs,
          std::vector<char> v_star, double delta_star, double mu_star) {
    if (!cfg.keep_artifacts) return;
    PipelineArtifacts a;
    a.h.emplace(h);
    a.small = vs;
    a.v_star = std::move(v_star);
    a.delta_star = delta_star;
    a.mu_star = mu_star;
    out.artifacts = std::move(a);
}

double coarse_with_retry(ListOracle& oracle, const DegreeTable& table, const PipelineConfig& cfg,
                         EstimateReport& r) {
    double scale = cfg.scale;
    for (int attempt = 0; attempt < 6; ++attempt) {
        auto c = coarse_estimate(oracle, table.degree, cfg.epsilon, scale, cfg.seed.derive("coarse").derive(attempt));
        if (c.lambda > 0.0) return c.lambda;
        r.notes.push_back("coarse estimate was zero; retrying with doubled sampling");
        scale *= 2.0;
    }
    r.notes.push_back("coarse estimate stayed zero; using 1 since the graph has an edge");
    return 1.0;
}

}  // namespace

PipelineResult estimate_matrix(MatrixOracle& oracle, const PipelineConfig& cfg) {
    PipelineResult out;
    auto& r = out.report;
    r = base_report(Mode::Matrix, oracle.n(), cfg);
    StepTimer timer(r, oracle.counters());
    const double n = static_cast<double>(oracle.n());
    const EdbsParams params = cfg.edbs_params();

    auto mh = timer.step("edge-count", [&] {
        auto rng = cfg.seed.derive("edge-count").engine();
        return estimate_edge_count(oracle, cfg.epsilon, cfg.scale, rng);
    });
    r.m_estimate = mh.m_hat;
    if (mh.m_hat <= 4.0 * cfg.epsilon * n) {
        r.early_exit = true;
        r.alpha = 0;
        r.lower = 0;
        r.upper = 6.0 * cfg.epsilon * n;
        timer.finish();
        return out;
    }

    SchematicParams sp{mh.m_hat, n, n, r.gamma, cfg.scale};
    auto built = timer.step("edbs", [&] {
        MatrixEdgeSampler sampler(oracle, mh.m_hat);
        auto rng = cfg.seed.derive("edbs").engine();
        return build_edbs(oracle.n(), params, sp, [&] { return sampler.sample(rng); });
    });
    r.ops = built.h.op_log().size();
    r.rounds = built.rounds;
    r.edbs_size = built.h.size();

    auto vs = timer.step("classify", [&] {
        auto rng = cfg.seed.derive("classify").engine();
        return classify_small_matrix(oracle, built.h, {cfg.epsilon, r.gamma, cfg.scale}, rng);
    });

    SmallSubgraph small(oracle, built.h, vs.member);
    finish_small_step(r, small, vs, n, cfg, timer);
    r.lower = r.alpha;
    r.upper = 1.5 * r.alpha + 6.0 * cfg.epsilon * n;
    keep(out, cfg, built.h, vs, {}, n, n);
    timer.finish();
    return out;
}

PipelineResult estimate_list(ListOracle& oracle, const PipelineConfig& cfg) {
    PipelineResult out;
    auto& r = out.report;
    r = base_report(Mode::List, oracle.n(), cfg);
    StepTimer timer(r, oracle.counters());
    const EdbsParams params = cfg.edbs_params();

    auto table = timer.step("degrees", [&] { return build_degree_table(oracle); });
    r.m_estimate = static_cast<double>(table.m);
    r.avg_degree = table.avg_degree;
    if (table.m == 0) {
        r.early_exit = true;
        timer.finish();
        return out;
    }

    r.lambda = timer.step("coarse", [&] { return coarse_with_retry(oracle, table, cfg, r); });
    const double delta = table.max_degree;
    SchematicParams sp{static_cast<double>(table.m), r.lambda, delta, r.gamma, cfg.scale};
    auto built = timer.step("edbs", [&] {
        ListEdgeSampler sampler(oracle, table);
        auto rng = cfg.seed.derive("edbs").engine();
        return build_edbs(oracle.n(), params, sp, [&] { return sampler.sample(rng); });
    });
    r.ops = built.h.op_log().size();
    r.rounds = built.rounds;
    r.edbs_size = built.h.size();

    auto vs = timer.step("classify", [&] {
        auto rng = cfg.seed.derive("classify").engine();
        return classify_small_list(oracle, table, built.h, {cfg.epsilon, r.gamma, cfg.scale}, rng);
    });

    SmallSubgraph small(oracle, table, built.h, vs.member);
    finish_small_step(r, small, vs, delta, cfg, timer);
    r.lower = r.alpha;
    r.upper = (1.5 + 6.0 * cfg.epsilon) * r.alpha;
    keep(out, cfg, built.h, vs, {}, delta, r.lambda);
    timer.finish();
    return out;
}

PipelineResult estimate_hybrid(ListOracle& oracle, const PipelineConfig& cfg) {
    PipelineResult out;
    auto& r = out.report;
    r = base_report(Mode::Hybrid, oracle.n(), cfg);
    StepTimer timer(r, oracle.counters());
    const double n = static_cast<double>(oracle.n());
    const EdbsParams params = cfg.edbs_params();

    auto table = timer.step("degrees", [&] { return build_degree_table(oracle); });
    r.m_estimate = static_cast<double>(table.m);
    r.avg_degree = table.avg_degree;
    if (table.m == 0) {
        r.early_exit = true;
        r.upper = 6.0 * cfg.epsilon * n;
        timer.finish();
        return out;
    }
    const double d = table.avg_degree;
    std::vector<char> v_star(oracle.n(), 0);
    for (std::size_t v = 0; v < oracle.n(); ++v) v_star[v] = table.degree[v] <= d / cfg.epsilon + 1e-9;

    r.lambda = timer.step("coarse", [&] { return coarse_with_retry(oracle, table, cfg, r); });
    SchematicParams sp{static_cast<double>(table.m), r.lambda, d, r.gamma, cfg.scale};
    auto built = timer.step("edbs", [&] {
        ListEdgeSampler sampler(oracle, table);
        auto rng = cfg.seed.derive("edbs").engine();
        return build_edbs(oracle.n(), params, sp, [&] { return sampler.sample(rng); });
    });
    r.ops = built.h.op_log().size();
    r.rounds = built.rounds;
    r.edbs_size = built.h.size();

    auto vs = timer.step("classify", [&] {
        auto rng = cfg.seed.derive("classify").engine();
        return classify_small_hybrid(oracle, table, built.h, v_star, {cfg.epsilon, r.gamma, cfg.scale}, rng);
    });

    SmallSubgraph small(oracle, table, built.h, vs.member);
    finish_small_step(r, small, vs, d, cfg, timer);
    r.lower = r.alpha;
    r.upper = 1.5 * r.alpha + 6.0 * cfg.epsilon * n;
    keep(out, cfg, built.h, vs, std::move(v_star), d, r.lambda);
    timer.finish();
    return out;
}

Plugin exact_plugin() {
    Plugin p;
    p.name = "exact";
    p.q = 1.0;
    p.estimate = [](SmallSubgraph& small, const std::vector<Vertex>& members, double, Seed) {
        std::vector<Edge> edges;
        for (Vertex v : members)
            for (Vertex w : small.neighbors(v))
                if (v < w) edges.emplace_back(v, w);
        Graph sub = graph_from_edges(small.vertex_count(), std::move(edges));
        return static_cast<double>(max_matching_from(sub, std::vector<Vertex>(sub.n(), kUnmatched)).size);
    };
    return p;
}

PipelineResult estimate_with_plugin(MatrixOracle& oracle, const Plugin& plugin, const PipelineConfig& cfg_in) {
    if (!(plugin.q > 0.0)) throw UsageError("plugin: q must be positive");
    PipelineConfig cfg = cfg_in;
    cfg.gamma = 1.0 / (1.0 + plugin.q);
    PipelineResult out;
    auto& r = out.report;
    r = base_report(Mode::Matrix, oracle.n(), cfg);
    r.notes.push_back("plugin: " + plugin.name);
    StepTimer timer(r, oracle.counters());
    const double n = static_cast<double>(oracle.n());

    auto mh = timer.step("edge-count", [&] {
        auto rng = cfg.seed.derive("edge-count").engine();
        return estimate_edge_count(oracle, cfg.epsilon, cfg.scale, rng);
    });
    r.m_estimate = mh.m_hat;
    if (mh.m_hat <= 4.0 * cfg.epsilon * n) {
        r.early_exit = true;
        r.upper = 6.0 * cfg.epsilon * n;
        timer.finish();
        return out;
    }
    SchematicParams sp{mh.m_hat, n, n, r.gamma, cfg.scale};
    auto built = timer.step("edbs", [&] {
        MatrixEdgeSampler sampler(oracle, mh.m_hat);
        auto rng = cfg.seed.derive("edbs").engine();
        return build_edbs(oracle.n(), cfg.edbs_params(), sp, [&] { return sampler.sample(rng); });
    });
    r.ops = built.h.op_log().size();
    r.rounds = built.rounds;
    r.edbs_size = built.h.size();
    auto vs = timer.step("classify", [&] {
        auto rng = cfg.seed.derive("classify").engine();
        return classify_small_matrix(oracle, built.h, {cfg.epsilon, r.gamma, cfg.scale}, rng);
    });
    SmallSubgraph small(oracle, built.h, vs.member);
    auto members = vs.vertices();
    r.small_vertices = members.size();
    r.alpha = timer.step("estimate", [&] {
        return plugin.estimate(small, members, cfg.epsilon, cfg.seed.derive("plugin"));
    });
    r.lower = r.alpha;
    r.upper = 1.5 * r.alpha + 6.0 * cfg.epsilon * n;
    keep(out, cfg, built.h, vs, {}, n, n);
    timer.finish();
    return out;
}

PipelineResult run_pipeline(const Graph& g, Mode mode, const PipelineConfig& cfg, QueryCounters& counters) {
    switch (mode) {
        case Mode::Matrix: {
            MatrixOracle oracle(g, counters);
            return estimate_matrix(oracle, cfg);
        }
        case Mode::List: {
            ListOracle oracle(g, counters);
            return estimate_list(oracle, cfg);
        }
        case Mode::Hybrid: {
            ListOracle oracle(g, counters);
            return estimate_hybrid(oracle, cfg);
        }
    }
    throw UsageError("unknown mode");
}

DichotomyResult run_dichotomy(const Graph& g, Mode mode, PipelineConfig cfg) {
    cfg.keep_artifacts = true;
    QueryCounters counters;
    DichotomyResult out;
    out.run = run_pipeline(g, mode, cfg, counters);
    const auto& rep = out.run.report;
    out.value = rep.alpha;
    // Matrix mode has no coarse estimate; its value estimate stands in.
    out.proxy = mode == Mode::Matrix ? rep.alpha : rep.lambda;
    if (!out.run.artifacts || !out.run.artifacts->h) return out;
    const Edbs& h = *out.run.artifacts->h;
    Graph hg = graph_from_edges(g.n(), h.edges());
    auto mm = max_matching_from(hg, std::vector<Vertex>(hg.n(), kUnmatched));
    out.mu_h = mm.size;
    if (static_cast<double>(out.mu_h) >= cfg.epsilon * out.proxy && out.mu_h > 0) {
        out.witness_returned = true;
        out.witness = mm.edges();
    }
    return out;
}

std::vector<Edge> underfull_edges(const Graph& g, const Edbs& h) {
    std::vector<Edge> out;
    for (const auto& e : g.edges())
        if (h.is_underfull(e.u, e.v)) out.push_back(e);
    return out;
}

}  // namespace sublin
