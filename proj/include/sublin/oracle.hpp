#pragma once

#include <cstdint>
#include <optional>

#include "sublin/graph.hpp"

namespace sublin {

struct QueryCounters {
    std::uint64_t matrix = 0;
    std::uint64_t list = 0;

    std::uint64_t total() const { return matrix + list; }
    friend QueryCounters operator-(QueryCounters a, const QueryCounters& b) {
        a.matrix -= b.matrix;
        a.list -= b.list;
        return a;
    }
    friend bool operator==(const QueryCounters&, const QueryCounters&) = default;
};

// Adjacency-matrix access. Every call costs exactly one matrix query.
class MatrixOracle {
public:
    MatrixOracle(const Graph& g, QueryCounters& counters) : g_(&g), counters_(&counters) {}

    std::size_t n() const { return g_->n(); }
    bool query(Vertex u, Vertex v);
    QueryCounters& counters() { return *counters_; }

private:
    const Graph* g_;
    QueryCounters* counters_;
};

// Adjacency-list access: query(v, i) returns the i-th neighbor (1-based) or none.
// Every call costs exactly one list query.
class ListOracle {
public:
    ListOracle(const Graph& g, QueryCounters& counters) : g_(&g), counters_(&counters) {}

    std::size_t n() const { return g_->n(); }
    std::optional<Vertex> query(Vertex v, std::size_t i);
    QueryCounters& counters() { return *counters_; }

private:
    const Graph* g_;
    QueryCounters* counters_;
};

}  // namespace sublin
