#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "sublin/graph.hpp"
#include "sublin/ranks.hpp"

namespace sublin {

inline constexpr Vertex kUnmatched = std::numeric_limits<Vertex>::max();

struct ExactMatching {
    std::vector<Vertex> mate;  // kUnmatched for free vertices
    std::size_t size = 0;

    std::vector<Edge> edges() const;
};

// Maximum matching by blossom contraction, certified by a final search that
// finds no augmenting path. Refuses graphs with more than `cap` vertices.
ExactMatching max_matching_exact(const Graph& g, std::size_t cap = 2000);

// Maximum matching grown from an initial matching, with no size cap.
ExactMatching max_matching_from(const Graph& g, std::vector<Vertex> mate);

bool has_augmenting_path(const Graph& g, const std::vector<Vertex>& mate);

// True iff every edge is in g and no two edges share a vertex.
bool is_valid_matching(const Graph& g, const std::vector<Edge>& matching);

// Builds the graph induced by an edge set on n vertices.
Graph graph_from_edges(std::size_t n, std::vector<Edge> edges);

// Greedy MIS over all vertices in (rank, id) order.
std::vector<char> offline_greedy_mis(const Graph& g, const RankSource& ranks);

// Thrown by offline_layered when path enumeration exceeds its step cap.
class EnumerationLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The layered matchings M_0..M_k computed globally. labels maps local vertex ids
// to the ids used for ranking (identity when null). The number of augmenting
// paths can grow exponentially with the level on dense graphs; step_cap bounds
// the enumeration work (0 means unbounded).
struct OfflineLayeredState {
    std::vector<std::vector<Edge>> matchings;  // M_0..M_k, local ids
    std::vector<std::vector<PathKey>> chosen;  // A_1..A_k at index 1..k, local ids
    int saturated_from = -1;                   // first level whose input was already maximum, or -1
};

OfflineLayeredState offline_layered(const Graph& g, int k, Seed seed, const std::vector<Vertex>* labels = nullptr,
                                    std::uint64_t step_cap = 0);

// p-value of Pearson's chi-square test against the uniform distribution.
// Requires at least 5 expected observations per cell.
double chi_square_uniform(const std::vector<std::uint64_t>& counts);

struct FractionalCheck {
    bool valid = false;  // every vertex has load at most 1 and weights are non-negative
    double size = 0;
    double bound = 0;  // 1.5 * mu(G)
    bool within_bound = false;
};

// weights[i] belongs to g.edges()[i].
FractionalCheck check_fractional_bound(const Graph& g, const std::vector<double>& weights);

}  // namespace sublin
