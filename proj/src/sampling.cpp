#include "sublin/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sublin {

namespace {

double ln(std::size_t n) { return std::log(static_cast<double>(std::max<std::size_t>(n, 1))); }

void check_epsilon(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw UsageError("epsilon must be in (0,1)");
}

std::uint64_t ceil_count(double x) {
    if (!(x > 0.0)) return 0;
    if (x > 1e18) throw UsageError("sample count overflow; lower the scale");
    return static_cast<std::uint64_t>(std::ceil(x));
}

// Unordered pair of distinct vertices, uniform.
std::pair<Vertex, Vertex> random_pair(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<Vertex> first(0, static_cast<Vertex>(n - 1));
    std::uniform_int_distribution<Vertex> second(0, static_cast<Vertex>(n - 2));
    Vertex u = first(rng), v = second(rng);
    if (v >= u) ++v;
    return {u, v};
}

}  // namespace

std::uint64_t edge_count_samples(std::size_t n, double eps, double scale) {
    check_epsilon(eps);
    if (n < 2) return 0;
    return ceil_count(scale * 100.0 / (eps * eps * eps) * static_cast<double>(n) * ln(n));
}

EdgeCountEstimate estimate_edge_count(MatrixOracle& oracle, double eps, double scale, std::mt19937_64& rng) {
    const std::size_t n = oracle.n();
    EdgeCountEstimate est;
    est.epsilon = eps;
    est.samples = edge_count_samples(n, eps, scale);
    for (std::uint64_t s = 0; s < est.samples; ++s) {
        auto [u, v] = random_pair(n, rng);
        if (oracle.query(u, v)) ++est.hits;
    }
    // Normalised by the number of distinct pairs, so each hit stands for n(n-1)/2 / S edges.
    double pairs = static_cast<double>(n) * static_cast<double>(n > 0 ? n - 1 : 0) / 2.0;
    double scaled = est.samples == 0 ? 0.0 : static_cast<double>(est.hits) * pairs / static_cast<double>(est.samples);
    est.m_hat = (1.0 + eps) * scaled + eps * static_cast<double>(n);
    return est;
}

MatrixEdgeSampler::MatrixEdgeSampler(MatrixOracle& oracle, double m_floor) : oracle_(&oracle) {
    double n = static_cast<double>(oracle.n());
    cap_ = ceil_count(64.0 * n * n / std::max(1.0, std::floor(m_floor)));
}

Edge MatrixEdgeSampler::sample(std::mt19937_64& rng) {
    if (oracle_->n() < 2) throw LikelyEmptyError("edge sampler: fewer than two vertices");
    for (std::uint64_t a = 0; a < cap_; ++a) {
        auto [u, v] = random_pair(oracle_->n(), rng);
        if (oracle_->query(u, v)) return Edge(u, v);
    }
    throw LikelyEmptyError("edge sampler: no edge after " + std::to_string(cap_) + " attempts; graph is likely empty");
}

DegreeTable build_degree_table(ListOracle& oracle) {
    const std::size_t n = oracle.n();
    DegreeTable t;
    t.degree.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t lo = 0, hi = n - 1;  // deg(v) lies in [lo, hi]
        while (lo < hi) {
            std::size_t mid = lo + (hi - lo + 1) / 2;
            if (oracle.query(static_cast<Vertex>(v), mid))
                lo = mid;
            else
                hi = mid - 1;
        }
        t.degree[v] = static_cast<std::uint32_t>(lo);
        t.m += lo;
        t.max_degree = std::max<std::uint32_t>(t.max_degree, t.degree[v]);
    }
    t.m /= 2;
    t.avg_degree = n == 0 ? 0.0 : 2.0 * static_cast<double>(t.m) / static_cast<double>(n);
    return t;
}

ListEdgeSampler::ListEdgeSampler(ListOracle& oracle, const DegreeTable& table)
    : oracle_(&oracle), table_(&table), prefix_(table.degree.size() + 1, 0) {
    for (std::size_t v = 0; v < table.degree.size(); ++v) prefix_[v + 1] = prefix_[v] + table.degree[v];
}

Edge ListEdgeSampler::sample(std::mt19937_64& rng) {
    if (prefix_.back() == 0) throw LikelyEmptyError("edge sampler: graph has no edges");
    std::uniform_int_distribution<std::uint64_t> pick(0, prefix_.back() - 1);
    std::uint64_t r = pick(rng);
    auto v = static_cast<Vertex>(std::upper_bound(prefix_.begin(), prefix_.end(), r) - prefix_.begin() - 1);
    std::uniform_int_distribution<std::size_t> slot(1, table_->degree[v]);
    auto w = oracle_->query(v, slot(rng));
    if (!w) throw std::logic_error("edge sampler: degree table disagrees with list oracle");
    return Edge(v, *w);
}

std::size_t SmallVertexSet::size() const {
    return static_cast<std::size_t>(std::count(member.begin(), member.end(), char{1}));
}

std::vector<Vertex> SmallVertexSet::vertices() const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < member.size(); ++v)
        if (member[v]) out.push_back(static_cast<Vertex>(v));
    return out;
}

namespace {

SmallVertexSet empty_set(std::size_t n, std::uint64_t k, double tau) {
    SmallVertexSet s;
    s.member.assign(n, 0);
    s.hits.assign(n, 0);
    s.samples_per_vertex = k;
    s.threshold = tau;
    return s;
}

double small_threshold(std::size_t n, const ClassifyParams& p) {
    return p.scale * 100.0 / (p.epsilon * p.epsilon) * ln(n);
}

}  // namespace

SmallVertexSet classify_small_matrix(MatrixOracle& oracle, const Edbs& h, const ClassifyParams& p,
                                     std::mt19937_64& rng) {
    check_epsilon(p.epsilon);
    const std::size_t n = oracle.n();
    const double dn = static_cast<double>(n);
    const std::uint64_t k = ceil_count(p.scale * 100.0 / p.epsilon * std::pow(dn, 1.0 - p.gamma) * ln(n));
    auto s = empty_set(n, k, small_threshold(n, p));
    if (n == 0) return s;
    std::uniform_int_distribution<Vertex> partner(0, static_cast<Vertex>(n - 1));
    for (std::size_t v = 0; v < n; ++v) {
        const auto x = static_cast<Vertex>(v);
        std::uint64_t hits = 0;
        for (std::uint64_t j = 0; j < k; ++j) {
            Vertex u = partner(rng);
            if (u == x) continue;
            if (h.is_underfull(x, u) && oracle.query(x, u)) ++hits;
        }
        s.hits[v] = hits;
        s.member[v] = static_cast<double>(hits) <= s.threshold;
    }
    return s;
}

SmallVertexSet classify_small_list(ListOracle& oracle, const DegreeTable& table, const Edbs& h,
                                   const ClassifyParams& p, std::mt19937_64& rng) {
    check_epsilon(p.epsilon);
    const std::size_t n = oracle.n();
    const double delta = table.max_degree;
    const std::uint64_t k = ceil_count(p.scale * 100.0 / p.epsilon * std::pow(delta, 1.0 - p.gamma) * ln(n));
    auto s = empty_set(n, k, small_threshold(n, p));
    if (table.max_degree == 0) {
        std::fill(s.member.begin(), s.member.end(), char{1});
        return s;
    }
    std::uniform_int_distribution<std::uint32_t> slot(1, table.max_degree);
    for (std::size_t v = 0; v < n; ++v) {
        const auto x = static_cast<Vertex>(v);
        std::uint64_t hits = 0;
        for (std::uint64_t j = 0; j < k; ++j) {
            std::uint32_t i = slot(rng);
            if (i > table.degree[v]) continue;
            auto w = oracle.query(x, i);
            if (w && h.is_underfull(x, *w)) ++hits;
        }
        s.hits[v] = hits;
        s.member[v] = static_cast<double>(hits) <= s.threshold;
    }
    return s;
}

SmallVertexSet classify_small_hybrid(ListOracle& oracle, const DegreeTable& table, const Edbs& h,
                                     const std::vector<char>& v_star, const ClassifyParams& p,
                                     std::mt19937_64& rng) {
    check_epsilon(p.epsilon);
    const std::size_t n = oracle.n();
    const double d = table.avg_degree;
    const std::uint64_t k =
        ceil_count(p.scale * 100.0 / (p.epsilon * p.epsilon) * std::pow(d, 1.0 - p.gamma) * ln(n));
    auto s = empty_set(n, k, small_threshold(n, p));
    const auto slots = static_cast<std::uint64_t>(std::floor(d / p.epsilon + 1e-9));
    if (slots == 0) {
        for (std::size_t v = 0; v < n; ++v) s.member[v] = v_star[v];
        return s;
    }
    std::uniform_int_distribution<std::uint64_t> slot(1, slots);
    for (std::size_t v = 0; v < n; ++v) {
        if (!v_star[v]) continue;
        const auto x = static_cast<Vertex>(v);
        std::uint64_t hits = 0;
        for (std::uint64_t j = 0; j < k; ++j) {
            std::uint64_t i = slot(rng);
            if (i > table.degree[v]) continue;
            auto w = oracle.query(x, i);
            if (w && v_star[*w] && h.is_underfull(x, *w)) ++hits;
        }
        s.hits[v] = hits;
        s.member[v] = static_cast<double>(hits) <= s.threshold;
    }
    return s;
}

}  // namespace sublin
