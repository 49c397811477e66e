#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sublin/edbs.hpp"
#include "sublin/local_oracles.hpp"
#include "sublin/sampling.hpp"
#include "sublin/small_subgraph.hpp"

namespace sublin {

enum class Mode { Matrix, List, Hybrid };
std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

struct PipelineConfig {
    double epsilon = 0.25;
    double gamma_c = 1.0 / 8.0;
    std::optional<double> gamma;  // overrides gamma_c * eps^2
    double c_beta = 32.0;
    std::optional<std::uint32_t> beta;  // overrides the c_beta rule
    double scale = 1.0;
    std::optional<double> estimator_scale;  // vertex samples of the final estimator; defaults to scale
    Seed seed;
    OracleOptions oracle;
    bool keep_artifacts = false;

    double gamma_value() const;
    EdbsParams edbs_params() const;
    double final_scale() const { return estimator_scale.value_or(scale); }
    void validate() const;
};

struct StepCost {
    std::string name;
    QueryCounters queries;
    double ms = 0;
};

struct EstimateReport {
    Mode mode = Mode::Matrix;
    std::size_t n = 0;
    double epsilon = 0, gamma = 0, scale = 0, estimator_scale = 0;
    std::uint32_t beta = 0;
    std::uint64_t seed = 0;

    double alpha = 0;
    double lower = 0;  // mu(G) is claimed to lie in [lower, upper]
    double upper = 0;
    bool early_exit = false;

    std::vector<StepCost> steps;
    QueryCounters queries;
    std::uint64_t ops = 0;
    std::uint64_t rounds = 0;
    std::uint64_t edbs_size = 0;
    double m_estimate = 0;  // m_hat in matrix mode, exact m from the degree table otherwise
    double lambda = 0;
    double avg_degree = 0;
    std::size_t small_vertices = 0;
    std::uint64_t estimator_samples = 0;
    int oracle_levels = 0;
    std::vector<std::string> notes;
    double ms = 0;
};

// Intermediate objects kept for verification when PipelineConfig::keep_artifacts is set.
struct PipelineArtifacts {
    std::optional<Edbs> h;
    SmallVertexSet small;
    std::vector<char> v_star;  // hybrid only
    double delta_star = 0;
    double mu_star = 0;
};

struct PipelineResult {
    EstimateReport report;
    std::optional<PipelineArtifacts> artifacts;
};

// mu(G) in [alpha, 1.5 alpha + 6 eps n] with high probability.
PipelineResult estimate_matrix(MatrixOracle& oracle, const PipelineConfig& cfg);
// mu(G) in [alpha, (1.5 + 6 eps) alpha] with high probability.
PipelineResult estimate_list(ListOracle& oracle, const PipelineConfig& cfg);
// Vertices of degree above d/eps are pruned first. mu(G) in [alpha, 1.5 alpha + 6 eps n].
PipelineResult estimate_hybrid(ListOracle& oracle, const PipelineConfig& cfg);

// A value estimator run on the small subgraph through matrix-style membership queries.
struct Plugin {
    std::string name;
    double q = 1.0;  // the estimator's cost exponent; sets gamma = 1/(1+q)
    std::function<double(SmallSubgraph& small, const std::vector<Vertex>& members, double epsilon, Seed seed)>
        estimate;
};

// Materialises the small subgraph and returns its exact maximum matching size.
Plugin exact_plugin();

PipelineResult estimate_with_plugin(MatrixOracle& oracle, const Plugin& plugin, const PipelineConfig& cfg);

PipelineResult run_pipeline(const Graph& g, Mode mode, const PipelineConfig& cfg, QueryCounters& counters);

struct DichotomyResult {
    bool witness_returned = false;
    std::vector<Edge> witness;  // a maximum matching of H when returned
    double value = 0;           // the value estimate otherwise
    std::size_t mu_h = 0;
    double proxy = 0;  // the estimate of mu(G) the decision compared against
    PipelineResult run;
};

DichotomyResult run_dichotomy(const Graph& g, Mode mode, PipelineConfig cfg);

// Verification helpers: edges of g outside h that are underfull.
std::vector<Edge> underfull_edges(const Graph& g, const Edbs& h);

}  // namespace sublin
