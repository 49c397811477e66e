#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sublin/seed.hpp"

namespace sublin {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::uint64_t edge_key(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}
inline std::uint64_t edge_key(const Edge& e) { return edge_key(e.u, e.v); }

// Raised for malformed input: bad parameters, bad files, invalid queries.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Order in which list queries enumerate a vertex's neighbors.
enum class ListOrder { PerVertexRandom, Global };

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t n, std::vector<Edge> edges, ListOrder order = ListOrder::PerVertexRandom,
          Seed order_seed = Seed(0));

    std::size_t n() const { return n_; }
    std::size_t m() const { return edges_.size(); }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    // Neighbors in list-query order.
    std::span<const Vertex> neighbors(Vertex v) const {
        return {list_.data() + offsets_[v], degree(v)};
    }
    bool has_edge(Vertex a, Vertex b) const;

    // Sorted, with u < v in each edge.
    const std::vector<Edge>& edges() const { return edges_; }
    ListOrder list_order() const { return order_; }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> list_;
    std::vector<Vertex> sorted_;
    ListOrder order_ = ListOrder::PerVertexRandom;
};

struct GraphStats {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t max_degree = 0;
    double avg_degree = 0.0;
};

// Ground truth for verification code only; estimators never call this.
GraphStats stats(const Graph& g);

// Text format: first line "n m", then m lines "u v" with u < v. '#' starts a comment.
Graph read_graph(std::istream& in, ListOrder order = ListOrder::PerVertexRandom,
                 Seed order_seed = Seed(0));
Graph load_graph(const std::string& path, ListOrder order = ListOrder::PerVertexRandom,
                 Seed order_seed = Seed(0));
void write_graph(std::ostream& out, const Graph& g);

}  // namespace sublin
