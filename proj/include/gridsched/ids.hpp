#pragma once

#include <compare>
#include <cstdint>

namespace gridsched {

/// Discrete simulation time, in unit steps.
using Step = std::uint64_t;

/// Dense resource index in [0, M).
struct ResourceId {
    std::uint32_t value = 0;
    friend constexpr auto operator<=>(ResourceId, ResourceId) = default;
};

/// Dense scheduler-agent index in [0, N).
struct SchedulerId {
    std::uint32_t value = 0;
    friend constexpr auto operator<=>(SchedulerId, SchedulerId) = default;
};

/// Unique within one run, assigned monotonically in creation order.
struct JobId {
    std::uint64_t value = 0;
    friend constexpr auto operator<=>(JobId, JobId) = default;
};

}  // namespace gridsched
