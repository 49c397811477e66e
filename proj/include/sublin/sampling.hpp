#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sublin/edbs.hpp"
#include "sublin/oracle.hpp"

namespace sublin {

class LikelyEmptyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EdgeCountEstimate {
    double m_hat = 0;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
    double epsilon = 0;
};

// Number of pair samples: ceil(scale * 100 / eps^3 * n * ln n).
std::uint64_t edge_count_samples(std::size_t n, double epsilon, double scale);

// Samples unordered vertex pairs with repetition, one matrix query each.
// With high probability m <= m_hat <= (1+eps) m + 2 eps n.
EdgeCountEstimate estimate_edge_count(MatrixOracle& oracle, double epsilon, double scale,
                                      std::mt19937_64& rng);

// Uniform edge sampling by rejection over vertex pairs.
class MatrixEdgeSampler {
public:
    // m_floor is a lower bound on m; the attempt cap is 64 n^2 / max(1, m_floor).
    MatrixEdgeSampler(MatrixOracle& oracle, double m_floor);

    Edge sample(std::mt19937_64& rng);
    std::uint64_t attempt_cap() const { return cap_; }

private:
    MatrixOracle* oracle_;
    std::uint64_t cap_;
};

struct DegreeTable {
    std::vector<std::uint32_t> degree;
    std::uint64_t m = 0;
    std::uint32_t max_degree = 0;
    double avg_degree = 0;
};

// Binary search for each degree with at most ceil(log2(n+1)) + 1 list queries per vertex.
DegreeTable build_degree_table(ListOracle& oracle);

// Exactly uniform over edges: vertex proportional to degree, then a uniform slot.
class ListEdgeSampler {
public:
    ListEdgeSampler(ListOracle& oracle, const DegreeTable& table);
    Edge sample(std::mt19937_64& rng);

private:
    ListOracle* oracle_;
    const DegreeTable* table_;
    std::vector<std::uint64_t> prefix_;
};

// Classification of vertices into V_small: those whose degree into the
// underfull edge set U is small.
struct SmallVertexSet {
    std::vector<char> member;
    std::vector<std::uint64_t> hits;  // per vertex; zero for vertices never sampled
    std::uint64_t samples_per_vertex = 0;
    double threshold = 0;

    bool contains(Vertex v) const { return member[v] != 0; }
    std::size_t size() const;
    std::vector<Vertex> vertices() const;
};

struct ClassifyParams {
    double epsilon = 0.25;
    double gamma = 0;
    double scale = 1.0;
};

// tau = scale * 100/eps^2 * ln n; a vertex is kept iff its hit count is at most tau.

// Partners drawn uniformly from V: K = scale * 100/eps * n^(1-gamma) * ln n.
SmallVertexSet classify_small_matrix(MatrixOracle& oracle, const Edbs& h, const ClassifyParams& p,
                                     std::mt19937_64& rng);

// Slots drawn uniformly from [1, Delta]: K = scale * 100/eps * Delta^(1-gamma) * ln n.
// A slot beyond deg(v) is a miss and costs no query.
SmallVertexSet classify_small_list(ListOracle& oracle, const DegreeTable& table, const Edbs& h,
                                   const ClassifyParams& p, std::mt19937_64& rng);

// Restricted to v_star (degree <= d/eps). Slots drawn from [1, floor(d/eps)],
// K = scale * 100/eps^2 * d^(1-gamma) * ln n, and only edges inside v_star count.
SmallVertexSet classify_small_hybrid(ListOracle& oracle, const DegreeTable& table, const Edbs& h,
                                     const std::vector<char>& v_star, const ClassifyParams& p,
                                     std::mt19937_64& rng);

}  // namespace sublin
