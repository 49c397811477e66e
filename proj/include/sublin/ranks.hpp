#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sublin/graph.hpp"
#include "sublin/seed.hpp"

namespace sublin {

// A path as its vertex sequence, in the lexicographically smaller orientation.
// A single vertex and an edge are paths of length 0 and 1.
using PathKey = std::vector<Vertex>;

PathKey canonical_path(std::vector<Vertex> seq);
inline PathKey edge_path(Vertex a, Vertex b) { return a < b ? PathKey{a, b} : PathKey{b, a}; }

struct PathKeyHash {
    std::size_t operator()(const PathKey& k) const;
};

// Random ranks for one level, a pure function of (seed, level, key).
// Order is by rank, then by key, so it is total even on rank collisions.
class RankSource {
public:
    RankSource() = default;
    RankSource(Seed seed, int level);

    std::uint64_t rank(std::span<const Vertex> key) const;
    bool before(std::span<const Vertex> a, std::span<const Vertex> b) const;

private:
    std::uint64_t salt_ = 0;
};

}  // namespace sublin
