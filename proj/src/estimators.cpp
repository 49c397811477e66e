#include <algorithm>
#include <cmath>
#include <random>

#include "sublin/local_oracles.hpp"

namespace sublin {

std::uint64_t yoshida_samples(std::size_t universe, double delta_eff, double eps, double scale) {
    if (!(eps > 0.0 && eps < 1.0)) throw UsageError("estimator: epsilon must be in (0,1)");
    if (universe < 2 || delta_eff <= 0.0) return 0;
    double t = scale * delta_eff * std::log(static_cast<double>(universe)) * 1e5 / (eps * eps);
    if (t > 1e15) throw UsageError("estimator: sample count overflow; lower the scale");
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(t)));
}

YoshidaEstimate estimate_mu_yoshida(LocalGraph& g, const std::vector<Vertex>& universe, double delta_eff,
                                    double eps, double scale, Seed seed, OracleOptions options) {
    YoshidaEstimate est;
    est.k = static_cast<int>(std::ceil(8.0 / eps - 1e-9));
    est.samples = yoshida_samples(universe.size(), delta_eff, eps, scale);
    if (est.samples == 0) return est;
    MatchingOracle oracle(g, seed.derive("oracle"), est.k, options);
    auto rng = seed.derive("vertices").engine();
    std::uniform_int_distribution<std::size_t> pick(0, universe.size() - 1);
    for (std::uint64_t s = 0; s < est.samples; ++s)
        if (oracle.vertex_matched(universe[pick(rng)])) ++est.hits;
    est.mu_tilde = static_cast<double>(est.hits) * static_cast<double>(universe.size()) * (1.0 - eps / 2.0) /
                   (2.0 * static_cast<double>(est.samples));
    est.stats = oracle.stats();
    return est;
}

CoarseEstimate coarse_estimate(ListOracle& list, const std::vector<std::uint32_t>& degrees, double eps,
                               double scale, Seed seed) {
    if (!(eps > 0.0 && eps < 1.0)) throw UsageError("coarse estimate: epsilon must be in (0,1)");
    CoarseEstimate est;
    const std::size_t n = list.n();
    std::uint64_t two_m = 0;
    std::uint32_t max_deg = 0;
    for (auto d : degrees) {
        two_m += d;
        max_deg = std::max(max_deg, d);
    }
    if (two_m == 0 || n == 0) return est;

    // A maximal matching has at least m / (2 Delta - 1) edges, which lower-bounds
    // the matched fraction q and fixes the sample count.
    const double q_min = static_cast<double>(two_m) / (static_cast<double>(n) * (2.0 * max_deg - 1.0));
    const double delta = eps / 5.0;
    const double t = scale * 12.0 * std::log(std::max(2.0, static_cast<double>(n))) / (delta * delta * q_min);
    est.samples = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(t)));

    ListGraph access(list, &degrees);
    OracleOptions opt;
    opt.component_fallback = false;
    MatchingOracle greedy(access, seed.derive("greedy"), 1, opt);
    auto rng = seed.derive("vertices").engine();
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    for (std::uint64_t s = 0; s < est.samples; ++s)
        if (greedy.vertex_matched(pick(rng))) ++est.hits;
    double size = static_cast<double>(est.hits) * static_cast<double>(n) / (2.0 * static_cast<double>(est.samples));
    est.lambda = size / (1.0 + delta);
    return est;
}

}  // namespace sublin
