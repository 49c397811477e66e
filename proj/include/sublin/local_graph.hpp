#pragma once

#include <optional>
#include <vector>

#include "sublin/graph.hpp"
#include "sublin/oracle.hpp"

namespace sublin {

// Neighborhood access used by local oracles. Implementations materialise a
// vertex's neighbor list on first use and cache it.
class LocalGraph {
public:
    virtual ~LocalGraph() = default;
    virtual std::size_t vertex_count() const = 0;
    virtual const std::vector<Vertex>& neighbors(Vertex v) = 0;
};

// Reads a Graph directly. Verification and test code only.
class GraphView final : public LocalGraph {
public:
    explicit GraphView(const Graph& g);
    std::size_t vertex_count() const override { return g_->n(); }
    const std::vector<Vertex>& neighbors(Vertex v) override { return lists_[v]; }

private:
    const Graph* g_;
    std::vector<std::vector<Vertex>> lists_;
};

// Reads neighbor lists through list queries. With known degrees a list costs
// deg(v) queries, otherwise deg(v) + 1.
class ListGraph final : public LocalGraph {
public:
    explicit ListGraph(ListOracle& oracle, const std::vector<std::uint32_t>* degrees = nullptr);
    std::size_t vertex_count() const override { return oracle_->n(); }
    const std::vector<Vertex>& neighbors(Vertex v) override;

private:
    ListOracle* oracle_;
    const std::vector<std::uint32_t>* degrees_;
    std::vector<std::optional<std::vector<Vertex>>> cache_;
};

}  // namespace sublin
