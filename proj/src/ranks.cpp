#include "sublin/ranks.hpp"

#include <algorithm>

namespace sublin {

PathKey canonical_path(std::vector<Vertex> seq) {
    if (std::lexicographical_compare(seq.rbegin(), seq.rend(), seq.begin(), seq.end()))
        std::reverse(seq.begin(), seq.end());
    return seq;
}

std::size_t PathKeyHash::operator()(const PathKey& k) const {
    std::uint64_t h = 0x84222325cbf29ce4ULL ^ k.size();
    for (Vertex v : k) h = splitmix64(h ^ v);
    return static_cast<std::size_t>(h);
}

RankSource::RankSource(Seed seed, int level)
    : salt_(seed.derive("rank").derive(static_cast<std::uint64_t>(level)).value()) {}

std::uint64_t RankSource::rank(std::span<const Vertex> key) const {
    std::uint64_t h = splitmix64(salt_ ^ key.size());
    for (Vertex v : key) h = splitmix64(h ^ (static_cast<std::uint64_t>(v) + 0x51ed2705ULL));
    return h;
}

bool RankSource::before(std::span<const Vertex> a, std::span<const Vertex> b) const {
    auto ra = rank(a), rb = rank(b);
    if (ra != rb) return ra < rb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace sublin
