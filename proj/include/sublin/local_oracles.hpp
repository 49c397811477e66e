#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "sublin/local_graph.hpp"
#include "sublin/mis.hpp"
#include "sublin/ranks.hpp"

namespace sublin {

// Raised when an oracle exceeds its node cap or recursion depth.
class OracleLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class MemoScope { Run, Query };

struct OracleOptions {
    MemoScope memo = MemoScope::Run;
    // Solve a whole connected component offline when it has at most
    // Delta^(2k) vertices (and at most fallback_max_vertices).
    bool component_fallback = true;
    std::size_t fallback_max_vertices = 1'000'000;
    std::uint64_t node_cap = 10'000'000;
    std::size_t max_depth = 20'000;
};

// Greedy MIS over the vertices of a LocalGraph under one rank order.
class VertexMisOracle {
public:
    VertexMisOracle(LocalGraph& g, RankSource ranks, MemoScope memo = MemoScope::Run);
    bool member(Vertex v);
    std::uint64_t nodes() const { return nodes_; }

private:
    LocalGraph* g_;
    RankSource ranks_;
    MemoScope scope_;
    std::uint64_t nodes_ = 0;
    GreedyMis<Vertex> mis_;
};

struct LevelStats {
    std::uint64_t matching_nodes = 0;  // O_i evaluations
    std::uint64_t mis_nodes = 0;       // H_i evaluations
    std::uint64_t path_checks = 0;     // V_i evaluations
};

struct OracleStats {
    std::vector<LevelStats> levels;  // index 0 unused
    std::uint64_t top_queries = 0;
    std::uint64_t largest_query = 0;  // nodes in the largest single top-level query
    std::uint64_t components_solved = 0;
    std::uint64_t components_declined = 0;  // offline enumeration exceeded the node cap
};

// Layered matching oracle. Level i holds M_i, obtained from M_{i-1} by flipping a
// maximal vertex-disjoint set A_i of augmenting paths of length 2i-1. A_i is the
// greedy MIS, in rank order, of the graph whose nodes are those paths and whose
// edges join paths sharing a vertex. M_0 is empty, so M_1 is the greedy maximal matching.
class MatchingOracle {
public:
    MatchingOracle(LocalGraph& g, Seed seed, int k, OracleOptions options = {});
    ~MatchingOracle();

    int levels() const { return k_; }

    bool in_matching(Vertex a, Vertex b) { return in_matching(k_, a, b); }
    bool in_matching(int level, Vertex a, Vertex b);
    bool vertex_matched(Vertex v) { return vertex_matched(k_, v); }
    bool vertex_matched(int level, Vertex v);

    // True iff p is an augmenting path of length 2*level-1 with respect to M_{level-1}.
    bool is_augmenting(int level, const PathKey& p);
    // True iff p is chosen into A_level. Requires is_augmenting(level, p).
    bool in_path_mis(int level, const PathKey& p);
    // Augmenting paths of length 2*level-1 (w.r.t. M_{level-1}) through edge (a,b).
    std::vector<PathKey> augmenting_paths_through(int level, Vertex a, Vertex b);

    const OracleStats& stats() const { return stats_; }
    void set_trace(std::ostream* out) { trace_ = out; }

private:
    struct Level;
    class Scope;

    bool o(int level, Vertex a, Vertex b);
    bool is_free(int level, Vertex v);
    bool h(int level, const PathKey& p);
    const std::vector<PathKey>& through(int level, Vertex a, Vertex b);
    std::vector<PathKey> sharing_vertex(int level, const PathKey& p);
    void arms(int level, Vertex start, Vertex avoid, bool first_matched, std::size_t max_len,
              std::vector<std::vector<Vertex>>& out);
    void try_fallback(Vertex v);
    void count_node();
    void clear_memo();

    LocalGraph* g_;
    Seed seed_;
    int k_;
    OracleOptions opt_;
    std::vector<std::unique_ptr<Level>> levels_;
    // Component results, kept across memo clears: per vertex 0 unknown, 1 solved, 2 declined.
    std::vector<char> comp_state_;
    std::vector<std::unordered_map<std::uint64_t, bool>> solved_;
    OracleStats stats_;
    std::uint64_t query_nodes_ = 0;
    std::size_t depth_ = 0;
    std::ostream* trace_ = nullptr;
};

// Every simple path with `length` edges that uses edge (a,b), in canonical form, sorted.
// Exhaustive: O(length * Delta^(length-1)) work.
std::vector<PathKey> simple_paths_through_edge(LocalGraph& g, Vertex a, Vertex b, std::size_t length);

// Samples T vertices of `universe` and counts those matched by M_k, k = ceil(8/eps).
// T = ceil(scale * delta_eff * ln|universe| * 1e5 / eps^2); mu~ = X |universe| (1 - eps/2) / (2T).
struct YoshidaEstimate {
    double mu_tilde = 0;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
    int k = 0;
    OracleStats stats;
};

std::uint64_t yoshida_samples(std::size_t universe, double delta_eff, double epsilon, double scale);

YoshidaEstimate estimate_mu_yoshida(LocalGraph& g, const std::vector<Vertex>& universe, double delta_eff,
                                    double epsilon, double scale, Seed seed, OracleOptions options = {});

// Size of the greedy maximal matching M estimated by vertex sampling, shrunk so
// that lambda <= |M| <= mu(G) <= 2|M| <= (2+eps) lambda with high probability.
struct CoarseEstimate {
    double lambda = 0;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
};

CoarseEstimate coarse_estimate(ListOracle& oracle, const std::vector<std::uint32_t>& degrees, double epsilon,
                               double scale, Seed seed);

}  // namespace sublin
