#pragma once

#include <cstdint>

namespace gridsched {

/// Counter-based pseudorandom stream: a SplitMix64-style finalizer applied
/// to a keyed counter. Each draw is a pure function of (key, counter), so
/// streams derived from the same master seed never interact and adding or
/// removing agents cannot perturb another agent's draws.
///
/// Distributions are implemented here rather than with <random> because
/// std::uniform_*_distribution output is not reproducible across standard
/// libraries, and run output must be bit-identical for a given config.
class Rng {
public:
    Rng() = default;
    Rng(std::uint64_t master_seed, std::uint64_t stream_tag,
        std::uint64_t stream_index = 0);

    std::uint64_t next_u64();

    /// Uniform in [0, 1), 53-bit resolution.
    double next_unit();

    /// Uniform in [lo, hi). Degenerate lo == hi returns lo.
    double uniform(double lo, double hi);

    /// Uniform integer in [0, n); n must be positive. Rejection sampling,
    /// so the result is unbiased and platform-independent.
    std::uint64_t uniform_index(std::uint64_t n);

    std::uint64_t draws() const { return counter_; }

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

/// Stream tags used by the engine; fixed so traces are stable across builds.
namespace stream_tag {
inline constexpr std::uint64_t kInit = 0x01;      // capacities
inline constexpr std::uint64_t kWorkload = 0x02;  // job lengths + destinations
inline constexpr std::uint64_t kAgent = 0x03;     // per-agent, indexed
}  // namespace stream_tag

}  // namespace gridsched
