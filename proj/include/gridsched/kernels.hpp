#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace gridsched::kern {

struct IndexedValue {
    std::size_t index = 0;
    double value = 0.0;
};

// Data-parallel inner loops of the simulator. Each kernel has a scalar
// reference implementation and, on x86-64, an AVX2 variant. Variants are
// bit-for-bit equivalent by construction: vector lanes map to array slots,
// per-slot operation order matches the scalar code, reductions use a fixed
// four-accumulator order, and the translation units are built with
// -ffp-contract=off so no path gains an FMA the other lacks. The active
// variant is resolved once at startup from CPU features; set
// GRIDSCHED_KERNEL=scalar|avx2 to override.

namespace scalar {

/// table[i] = (1 - alpha) * table[i] + alpha * sums[i]
void ema_update(double* table, const double* sums, double alpha, std::size_t n);

/// acc[i] += x[i]
void add_inplace(double* acc, const double* x, std::size_t n);

/// x[i] = max(0, x[i] - amount)
void decay_floor(double* x, double amount, std::size_t n);

/// Fixed-order reduction: four strided partial sums combined as
/// (a0 + a1) + (a2 + a3), then the tail added sequentially.
double sum(const double* x, std::size_t n);

/// Writes the indices attaining max(x) into `ties` in ascending order and
/// returns how many there are. n must be positive.
std::size_t collect_max(const double* x, std::size_t n, std::uint32_t* ties);

/// Same for the minimum.
std::size_t collect_min(const double* x, std::size_t n, std::uint32_t* ties);

/// argmin over i of ready[i] + length / capacity[i]; ties resolve to the
/// lowest index. n must be positive, capacities positive.
IndexedValue ect_argmin(const double* ready, const double* capacity,
                        double length, std::size_t n);

}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define GRIDSCHED_HAVE_AVX2_KERNELS 1
namespace avx2 {
void ema_update(double* table, const double* sums, double alpha, std::size_t n);
void add_inplace(double* acc, const double* x, std::size_t n);
void decay_floor(double* x, double amount, std::size_t n);
double sum(const double* x, std::size_t n);
std::size_t collect_max(const double* x, std::size_t n, std::uint32_t* ties);
std::size_t collect_min(const double* x, std::size_t n, std::uint32_t* ties);
IndexedValue ect_argmin(const double* ready, const double* capacity,
                        double length, std::size_t n);
}  // namespace avx2
#endif

struct Dispatch {
    const char* name;
    void (*ema_update)(double*, const double*, double, std::size_t);
    void (*add_inplace)(double*, const double*, std::size_t);
    void (*decay_floor)(double*, double, std::size_t);
    double (*sum)(const double*, std::size_t);
    std::size_t (*collect_max)(const double*, std::size_t, std::uint32_t*);
    std::size_t (*collect_min)(const double*, std::size_t, std::uint32_t*);
    IndexedValue (*ect_argmin)(const double*, const double*, double, std::size_t);
};

/// The variant in effect (CPU-detected, or GRIDSCHED_KERNEL override).
const Dispatch& active();

/// Test hook: force a variant by name ("scalar", "avx2"), or "" to return
/// to automatic resolution. Throws std::invalid_argument on unknown or
/// unavailable names. Not thread-safe; call before spawning runs.
void force_variant(std::string_view name);

/// Variants compiled into this binary, for equivalence tests.
std::size_t variant_count();
const Dispatch& variant(std::size_t i);

inline void ema_update(double* table, const double* sums, double alpha, std::size_t n) {
    active().ema_update(table, sums, alpha, n);
}
inline void add_inplace(double* acc, const double* x, std::size_t n) {
    active().add_inplace(acc, x, n);
}
inline void decay_floor(double* x, double amount, std::size_t n) {
    active().decay_floor(x, amount, n);
}
inline double sum(const double* x, std::size_t n) { return active().sum(x, n); }
inline std::size_t collect_max(const double* x, std::size_t n, std::uint32_t* ties) {
    return active().collect_max(x, n, ties);
}
inline std::size_t collect_min(const double* x, std::size_t n, std::uint32_t* ties) {
    return active().collect_min(x, n, ties);
}
inline IndexedValue ect_argmin(const double* ready, const double* capacity,
                               double length, std::size_t n) {
    return active().ect_argmin(ready, capacity, length, n);
}

}  // namespace gridsched::kern
