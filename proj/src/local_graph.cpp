#include "sublin/local_graph.hpp"

namespace sublin {

GraphView::GraphView(const Graph& g) : g_(&g), lists_(g.n()) {
    for (std::size_t v = 0; v < g.n(); ++v) {
        auto nb = g.neighbors(static_cast<Vertex>(v));
        lists_[v].assign(nb.begin(), nb.end());
    }
}

ListGraph::ListGraph(ListOracle& oracle, const std::vector<std::uint32_t>* degrees)
    : oracle_(&oracle), degrees_(degrees), cache_(oracle.n()) {}

const std::vector<Vertex>& ListGraph::neighbors(Vertex v) {
    auto& slot = cache_[v];
    if (slot) return *slot;
    slot.emplace();
    if (degrees_) {
        for (std::size_t i = 1; i <= (*degrees_)[v]; ++i) slot->push_back(*oracle_->query(v, i));
    } else {
        for (std::size_t i = 1; i < oracle_->n(); ++i) {
            auto w = oracle_->query(v, i);
            if (!w) break;
            slot->push_back(*w);
        }
    }
    return *slot;
}

}  // namespace sublin
