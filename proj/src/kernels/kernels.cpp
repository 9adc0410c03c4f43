#include "gridsched/kernels.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gridsched::kern {

namespace scalar {

void ema_update(double* table, const double* sums, double alpha, std::size_t n) {
    const double keep = 1.0 - alpha;
    for (std::size_t i = 0; i < n; ++i)
        table[i] = keep * table[i] + alpha * sums[i];
}

void add_inplace(double* acc, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += x[i];
}

void decay_floor(double* x, double amount, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double t = x[i] - amount;
        x[i] = t > 0.0 ? t : 0.0;
    }
}

double sum(const double* x, std::size_t n) {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        a0 += x[i];
        a1 += x[i + 1];
        a2 += x[i + 2];
        a3 += x[i + 3];
    }
    double s = (a0 + a1) + (a2 + a3);
    for (; i < n; ++i) s += x[i];
    return s;
}

std::size_t collect_max(const double* x, std::size_t n, std::uint32_t* ties) {
    assert(n > 0);
    double m = x[0];
    for (std::size_t i = 1; i < n; ++i)
        if (x[i] > m) m = x[i];
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (x[i] == m) ties[count++] = static_cast<std::uint32_t>(i);
    return count;
}

std::size_t collect_min(const double* x, std::size_t n, std::uint32_t* ties) {
    assert(n > 0);
    double m = x[0];
    for (std::size_t i = 1; i < n; ++i)
        if (x[i] < m) m = x[i];
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (x[i] == m) ties[count++] = static_cast<std::uint32_t>(i);
    return count;
}

IndexedValue ect_argmin(const double* ready, const double* capacity,
                        double length, std::size_t n) {
    assert(n > 0);
    double best = ready[0] + length / capacity[0];
    std::size_t best_index = 0;
    for (std::size_t i = 1; i < n; ++i) {
        const double v = ready[i] + length / capacity[i];
        if (v < best) {
            best = v;
            best_index = i;
        }
    }
    return {best_index, best};
}

}  // namespace scalar

namespace {

constexpr Dispatch kScalar = {
    "scalar",         scalar::ema_update,  scalar::add_inplace,
    scalar::decay_floor, scalar::sum,      scalar::collect_max,
    scalar::collect_min, scalar::ect_argmin,
};

#ifdef GRIDSCHED_HAVE_AVX2_KERNELS
constexpr Dispatch kAvx2 = {
    "avx2",           avx2::ema_update,    avx2::add_inplace,
    avx2::decay_floor,   avx2::sum,        avx2::collect_max,
    avx2::collect_min,   avx2::ect_argmin,
};
constexpr const Dispatch* kVariants[] = {&kScalar, &kAvx2};
#else
constexpr const Dispatch* kVariants[] = {&kScalar};
#endif

bool avx2_available() {
#ifdef GRIDSCHED_HAVE_AVX2_KERNELS
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

const Dispatch* lookup(std::string_view name) {
    for (const Dispatch* d : kVariants)
        if (name == d->name) return d;
    return nullptr;
}

const Dispatch* resolve() {
    if (const char* env = std::getenv("GRIDSCHED_KERNEL")) {
        if (const Dispatch* d = lookup(env)) return d;
        throw std::invalid_argument("GRIDSCHED_KERNEL: unknown kernel variant '" +
                                    std::string(env) + "'");
    }
#ifdef GRIDSCHED_HAVE_AVX2_KERNELS
    if (avx2_available()) return &kAvx2;
#endif
    return &kScalar;
}

const Dispatch* g_forced = nullptr;

}  // namespace

const Dispatch& active() {
    if (g_forced) return *g_forced;
    static const Dispatch* resolved = resolve();
    return *resolved;
}

void force_variant(std::string_view name) {
    if (name.empty()) {
        g_forced = nullptr;
        return;
    }
    const Dispatch* d = lookup(name);
    if (!d) throw std::invalid_argument("unknown kernel variant '" + std::string(name) + "'");
    if (d->name == std::string_view("avx2") && !avx2_available())
        throw std::invalid_argument("avx2 kernels not available on this CPU");
    g_forced = d;
}

std::size_t variant_count() { return sizeof(kVariants) / sizeof(kVariants[0]); }

const Dispatch& variant(std::size_t i) {
    assert(i < variant_count());
    return *kVariants[i];
}

}  // namespace gridsched::kern
