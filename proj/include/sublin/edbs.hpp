#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <unordered_set>
#include <vector>

#include "sublin/graph.hpp"

namespace sublin {

// beta and epsilon of an edge-degree constrained subgraph. epsilon*beta is an integer >= 1,
// so underfull and overfull are decided in exact integer arithmetic.
struct EdbsParams {
    double epsilon = 0.25;
    std::uint32_t beta = 0;

    EdbsParams() = default;
    EdbsParams(double epsilon, std::uint32_t beta);

    // beta = ceil(c_beta / eps^3), raised until eps*beta is an integer.
    static EdbsParams from_epsilon(double epsilon, double c_beta = 32.0);

    std::uint32_t slack() const { return eps_beta_; }
    // An edge outside H is underfull iff its H-degree is below this.
    std::uint32_t underfull_below() const { return beta - eps_beta_; }

private:
    std::uint32_t eps_beta_ = 0;
};

struct OpRecord {
    enum Kind : char { Insert = '+', Delete = '-' };
    Kind kind;
    Edge edge;
    std::int64_t potential2_after;
};

// Thrown when an operation's precondition or the potential invariant is violated.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The subgraph H. Potential is tracked doubled so it stays integral:
// 2*Phi = (2*beta - 1) * sum_v deg(v) - 2 * sum_v deg(v)^2.
class Edbs {
public:
    Edbs(std::size_t n, EdbsParams params);

    std::size_t n() const { return deg_.size(); }
    const EdbsParams& params() const { return params_; }
    std::size_t size() const { return keys_.size(); }

    bool contains(Vertex u, Vertex v) const { return keys_.count(edge_key(u, v)) != 0; }
    std::uint32_t degree(Vertex v) const { return deg_[v]; }
    std::uint32_t edge_degree(Vertex u, Vertex v) const { return deg_[u] + deg_[v]; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

    // For an edge of G outside H.
    bool is_underfull(Vertex u, Vertex v) const {
        return !contains(u, v) && edge_degree(u, v) < params_.underfull_below();
    }
    // For an edge of H.
    bool is_overfull(Vertex u, Vertex v) const {
        return contains(u, v) && edge_degree(u, v) > params_.beta;
    }

    void insert(Vertex u, Vertex v);
    void remove(Vertex u, Vertex v);

    // Deletes overfull edges until none remain, starting from the endpoints of a
    // just-inserted edge. Returns the number of deletions.
    std::size_t restore(Vertex u, Vertex v);

    // Bypasses the underfull precondition; for fault-injection checks only.
    void force_insert(Vertex u, Vertex v);

    std::int64_t potential2() const { return phi2_; }
    double potential() const { return static_cast<double>(phi2_) / 2.0; }

    const std::vector<OpRecord>& op_log() const { return log_; }
    std::vector<Edge> edges() const;

    // Full scans, for tests and verification.
    std::vector<Edge> overfull_edges() const;
    std::int64_t recompute_potential2() const;

    void dump(std::ostream& out) const;

private:
    void link(Vertex u, Vertex v);
    void unlink(Vertex u, Vertex v);

    EdbsParams params_;
    std::vector<std::uint32_t> deg_;
    std::vector<std::vector<Vertex>> adj_;
    std::unordered_set<std::uint64_t> keys_;
    std::int64_t phi2_ = 0;
    std::vector<OpRecord> log_;
};

// Replays an op log from the empty subgraph and checks that every operation
// raises 2*Phi by at least 2. Returns the index of the first offending op, or -1.
long first_potential_violation(std::size_t n, const EdbsParams& params, const std::vector<OpRecord>& log);

// Parameters of the sample-insert-restore loop.
struct SchematicParams {
    double m_star = 0;
    double mu_star = 1;
    double delta_star = 1;
    double gamma = 0;
    double scale = 1.0;
};

// ceil(scale * 100 * m* * ln n / (mu* * (Delta*)^gamma)); zero only when m* is zero.
std::uint64_t round_length(const SchematicParams& sp, std::size_t n);

struct EdbsBuild {
    Edbs h;
    std::size_t rounds = 0;
    std::uint64_t samples = 0;
};

using EdgeSampler = std::function<Edge()>;

// Repeats rounds of sampled insert-and-restore until a round makes no change.
EdbsBuild build_edbs(std::size_t n, const EdbsParams& params, const SchematicParams& sp,
                     const EdgeSampler& sample);

}  // namespace sublin
