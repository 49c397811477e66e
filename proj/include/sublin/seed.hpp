#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace sublin {

std::uint64_t splitmix64(std::uint64_t x);

// A run seed. Sub-seeds are derived per component so that adding a new
// consumer of randomness never perturbs the streams of existing ones.
class Seed {
public:
    constexpr Seed() = default;
    constexpr explicit Seed(std::uint64_t master) : value_(master) {}

    std::uint64_t value() const { return value_; }
    Seed derive(std::string_view label) const;
    Seed derive(std::uint64_t index) const;
    std::mt19937_64 engine() const { return std::mt19937_64(value_); }

    friend bool operator==(const Seed&, const Seed&) = default;

private:
    std::uint64_t value_ = 0;
};

}  // namespace sublin
