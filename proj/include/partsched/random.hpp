#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace partsched {

/// Seedable pseudo-random stream. Child streams are derived from a
/// (seed, index) pair so trials can be generated independently and in any order.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }

    /// Uniform integer in [0, n). n must be positive.
    std::size_t uniform_index(std::size_t n);

    /// Uniform real in [0, 1).
    double uniform_real();

    bool bernoulli(double probability);

    RandomStream split(std::uint64_t index) const;

    static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace partsched
