#include "sublin/small_subgraph.hpp"

#include <algorithm>
#include <cmath>

namespace sublin {

SmallSubgraph::SmallSubgraph(MatrixOracle& oracle, const Edbs& h, std::vector<char> members)
    : matrix_(&oracle), h_(&h), members_(std::move(members)), cache_(members_.size()) {
    if (members_.size() != oracle.n() || h.n() != oracle.n()) throw UsageError("small subgraph: size mismatch");
}

SmallSubgraph::SmallSubgraph(ListOracle& oracle, const DegreeTable& table, const Edbs& h,
                             std::vector<char> members)
    : list_(&oracle), table_(&table), h_(&h), members_(std::move(members)), cache_(members_.size()) {
    if (members_.size() != oracle.n() || h.n() != oracle.n()) throw UsageError("small subgraph: size mismatch");
}

std::vector<Vertex> SmallSubgraph::member_list() const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < members_.size(); ++v)
        if (members_[v]) out.push_back(static_cast<Vertex>(v));
    return out;
}

const std::vector<Vertex>& SmallSubgraph::neighbors(Vertex v) {
    auto& slot = cache_[v];
    if (slot) return *slot;
    slot.emplace();
    if (!members_[v]) return *slot;
    if (matrix_) {
        for (std::size_t u = 0; u < members_.size(); ++u) {
            auto w = static_cast<Vertex>(u);
            if (w != v && contains(v, w)) slot->push_back(w);
        }
    } else {
        for (std::size_t i = 1; i <= table_->degree[v]; ++i) {
            Vertex w = *list_->query(v, i);
            if (contains(v, w, true)) slot->push_back(w);
        }
    }
    return *slot;
}

bool SmallSubgraph::edge_of_g(Vertex u, Vertex v) {
    if (matrix_) return matrix_->query(u, v);
    for (std::size_t i = 1; i <= table_->degree[u]; ++i)
        if (*list_->query(u, i) == v) return true;
    return false;
}

bool SmallSubgraph::contains(Vertex u, Vertex v, bool edge_known) {
    if (u == v || !members_[u] || !members_[v]) return false;
    if (h_->contains(u, v)) return true;
    if (h_->edge_degree(u, v) >= h_->params().underfull_below()) return false;
    return edge_known || edge_of_g(u, v);
}

std::optional<Vertex> SmallSubgraph::list_query(Vertex v, std::size_t i) {
    const auto& nb = neighbors(v);
    if (i < 1 || i > nb.size()) return std::nullopt;
    return nb[i - 1];
}

double SmallSubgraph::degree_bound(const EdbsParams& p, double delta_star, double gamma) {
    return p.beta + (1.0 + p.epsilon) * std::pow(std::max(delta_star, 1.0), gamma) / p.epsilon;
}

}  // namespace sublin
