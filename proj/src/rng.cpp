#include "gridsched/rng.hpp"

#include <cassert>

namespace gridsched {
namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t master_seed, std::uint64_t stream_tag,
         std::uint64_t stream_index) {
    std::uint64_t k = mix64(master_seed + kGamma);
    k = mix64(k ^ (stream_tag * kGamma));
    k = mix64(k ^ (stream_index * kGamma + 1));
    key_ = k;
}

std::uint64_t Rng::next_u64() {
    counter_ += 1;
    return mix64(key_ + counter_ * kGamma);
}

double Rng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + next_unit() * (hi - lo);
}

std::uint64_t Rng::uniform_index(std::uint64_t n) {
    assert(n > 0);
    if (n == 1) return 0;
    // reject the tail that would bias the modulo
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= threshold) return r % n;
    }
}

}  // namespace gridsched
