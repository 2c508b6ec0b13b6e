#include "partsched/random.hpp"

#include <cassert>

namespace partsched {

namespace {

// SplitMix64 finalizer
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), engine_(mix64(seed)) {}

std::size_t RandomStream::uniform_index(std::size_t n) {
    assert(n > 0);
    std::uniform_int_distribution<std::size_t> dist(0, n - 1);
    return dist(engine_);
}

double RandomStream::uniform_real() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
}

bool RandomStream::bernoulli(double probability) {
    return uniform_real() < probability;
}

RandomStream RandomStream::split(std::uint64_t index) const {
    return RandomStream(derive_seed(seed_, index));
}

std::uint64_t RandomStream::derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master + 0x9e3779b97f4a7c15ULL * (index + 1));
}

} // namespace partsched
