#pragma once

// Independent reference computations for tests. Deliberately naive.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "sublin/edbs.hpp"
#include "sublin/graph.hpp"
#include "sublin/seed.hpp"

namespace sublin::testing {

// Maximum matching size by memoised search over vertex subsets. n <= 20.
inline std::size_t brute_force_mu(const Graph& g) {
    const std::size_t n = g.n();
    std::map<std::uint32_t, std::size_t> memo;
    std::function<std::size_t(std::uint32_t)> best = [&](std::uint32_t used) -> std::size_t {
        std::size_t v = 0;
        while (v < n && (used >> v & 1u)) ++v;
        if (v >= n) return 0;
        if (auto it = memo.find(used); it != memo.end()) return it->second;
        std::size_t r = best(used | (1u << v));  // leave v unmatched
        for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
            if (!(used >> w & 1u)) r = std::max(r, 1 + best(used | (1u << v) | (1u << w)));
        memo[used] = r;
        return r;
    };
    return best(0);
}

inline std::vector<std::uint32_t> degrees_of(const Graph& g) {
    std::vector<std::uint32_t> d(g.n());
    for (std::size_t v = 0; v < g.n(); ++v) d[v] = static_cast<std::uint32_t>(g.degree(static_cast<Vertex>(v)));
    return d;
}

// Vertex 0 has `width` neighbors. `planted` of them have no H-edges, so their edge
// to 0 stays underfull; each other neighbor gets 6 private leaves in H, which
// pushes its edge to 0 out of U when beta = 8 and eps = 1/4. Hence deg_0(U) = planted.
struct PlantedInstance {
    Graph g;
    Edbs h;
};

inline PlantedInstance planted_u_degree(std::size_t planted, std::size_t width, Seed seed) {
    const std::size_t heavy = width - planted;
    const std::size_t n = 1 + width + 6 * heavy;
    std::vector<Vertex> nbrs(width);
    for (std::size_t i = 0; i < width; ++i) nbrs[i] = static_cast<Vertex>(i + 1);
    auto rng = seed.engine();
    std::shuffle(nbrs.begin(), nbrs.end(), rng);
    std::vector<Edge> edges;
    std::vector<Edge> h_edges;
    for (Vertex u : nbrs) edges.emplace_back(0, u);
    Vertex next = static_cast<Vertex>(width + 1);
    for (std::size_t i = planted; i < width; ++i)
        for (int leaf = 0; leaf < 6; ++leaf) {
            edges.emplace_back(nbrs[i], next);
            h_edges.emplace_back(nbrs[i], next++);
        }
    PlantedInstance out{Graph(n, edges, ListOrder::PerVertexRandom, seed.derive("lists")), Edbs(n, EdbsParams(0.25, 8))};
    for (auto e : h_edges) out.h.insert(e.u, e.v);
    return out;
}

}  // namespace sublin::testing
