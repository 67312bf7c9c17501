#include "fnls/rng.hpp"

#include <cmath>

namespace fnls {

namespace {

constexpr std::uint64_t GOLDEN = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t index)
    : state_(mix(seed + GOLDEN * (index + 1)) ^ mix(index + GOLDEN)) {}

std::uint64_t RandomStream::next_u64() {
    state_ += GOLDEN;
    return mix(state_);
}

double RandomStream::next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

std::pair<double, double> RandomStream::next_normal_pair() {
    const double u = next_unit();
    const double w = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double theta = 2.0 * M_PI * w;
    return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace fnls
