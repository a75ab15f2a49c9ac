#include "concentra/rng.hpp"

#include <cmath>
#include <numbers>

namespace concentra {

namespace {

// SplitMix64 finalizer: full-avalanche mix of a 64-bit word.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t combine(std::uint64_t a, std::uint64_t b) {
    return mix64(a ^ (mix64(b) + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

}  // namespace

SeedSpec SeedSpec::substream(std::uint64_t slot) const {
    return SeedSpec{master_seed, combine(stream_id, slot)};
}

RngStream::RngStream(SeedSpec spec) : key_(combine(spec.master_seed, spec.stream_id)) {}

std::uint64_t RngStream::next_u64() {
    // Weyl-sequence counter through the avalanche mix; equivalent to SplitMix64
    // seeded at key_, but indexable: output depends only on (key_, counter_).
    const std::uint64_t v = mix64(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
    ++counter_;
    return v;
}

double RngStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_double_open() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double RngStream::next_normal() {
    const double u1 = next_double_open();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<double> RngStream::next_normal_vec(int d) {
    std::vector<double> v(d);
    for (int i = 0; i < d; ++i) v[i] = next_normal();
    return v;
}

std::uint64_t RngStream::next_below(std::uint64_t m) {
    // Rejection against the largest multiple of m to avoid modulo bias.
    const std::uint64_t limit = ~0ULL - (~0ULL % m);
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % m;
}

}  // namespace concentra
