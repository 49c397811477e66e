#pragma once

#include <optional>
#include <vector>

#include "sublin/edbs.hpp"
#include "sublin/local_graph.hpp"
#include "sublin/sampling.hpp"

namespace sublin {

// The subgraph E_small: edges of H or of U (underfull, outside H) with both
// endpoints in a given vertex set. Membership is decided from H where possible;
// a query to G is made only for pairs that could be underfull edges.
class SmallSubgraph final : public LocalGraph {
public:
    SmallSubgraph(MatrixOracle& oracle, const Edbs& h, std::vector<char> members);
    SmallSubgraph(ListOracle& oracle, const DegreeTable& table, const Edbs& h, std::vector<char> members);

    std::size_t vertex_count() const override { return members_.size(); }
    const std::vector<Vertex>& neighbors(Vertex v) override;

    bool is_member(Vertex v) const { return members_[v] != 0; }
    std::vector<Vertex> member_list() const;

    // Pass edge_known when (u,v) is already known to be an edge of G.
    bool contains(Vertex u, Vertex v, bool edge_known = false);
    std::optional<Vertex> list_query(Vertex v, std::size_t i);

    // Upper bound on the degree of every member: beta + (1+eps) * delta_star^gamma / eps.
    static double degree_bound(const EdbsParams& p, double delta_star, double gamma);

private:
    bool edge_of_g(Vertex u, Vertex v);

    MatrixOracle* matrix_ = nullptr;
    ListOracle* list_ = nullptr;
    const DegreeTable* table_ = nullptr;
    const Edbs* h_;
    std::vector<char> members_;
    std::vector<std::optional<std::vector<Vertex>>> cache_;
};

}  // namespace sublin
