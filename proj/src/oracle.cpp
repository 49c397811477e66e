#include "sublin/oracle.hpp"

#include <string>

namespace sublin {

bool MatrixOracle::query(Vertex u, Vertex v) {
    if (u >= g_->n() || v >= g_->n()) throw UsageError("matrix query: vertex out of range");
    if (u == v) throw UsageError("matrix query: u == v");
    ++counters_->matrix;
    return g_->has_edge(u, v);
}

std::optional<Vertex> ListOracle::query(Vertex v, std::size_t i) {
    if (v >= g_->n()) throw UsageError("list query: vertex out of range");
    if (i < 1 || i > g_->n()) throw UsageError("list query: index " + std::to_string(i) + " out of range");
    ++counters_->list;
    auto nb = g_->neighbors(v);
    if (i > nb.size()) return std::nullopt;
    return nb[i - 1];
}

}  // namespace sublin
