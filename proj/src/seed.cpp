#include "sublin/seed.hpp"

namespace sublin {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Seed Seed::derive(std::string_view label) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return Seed(splitmix64(value_ ^ splitmix64(h)));
}

Seed Seed::derive(std::uint64_t index) const {
    return Seed(splitmix64(splitmix64(value_) + 0x632be59bd9b4e019ULL * (index + 1)));
}

}  // namespace sublin
