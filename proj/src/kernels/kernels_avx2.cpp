// AVX2 kernel variants. Lane j of a 256-bit vector maps to slot 4k + j, so
// every per-slot operation chain is the one the scalar reference performs;
// reductions extract lanes and combine them in the scalar reference's fixed
// order. Built with -mavx2 -ffp-contract=off.
#if defined(__x86_64__) || defined(_M_X64)

#include "gridsched/kernels.hpp"

#include <immintrin.h>

#include <cassert>

namespace gridsched::kern::avx2 {

void ema_update(double* table, const double* sums, double alpha, std::size_t n) {
    const double keep = 1.0 - alpha;
    const __m256d vkeep = _mm256_set1_pd(keep);
    const __m256d valpha = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d t = _mm256_loadu_pd(table + i);
        const __m256d s = _mm256_loadu_pd(sums + i);
        _mm256_storeu_pd(table + i, _mm256_add_pd(_mm256_mul_pd(vkeep, t),
                                                  _mm256_mul_pd(valpha, s)));
    }
    for (; i < n; ++i) table[i] = keep * table[i] + alpha * sums[i];
}

void add_inplace(double* acc, const double* x, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i),
                                                _mm256_loadu_pd(x + i)));
    }
    for (; i < n; ++i) acc[i] += x[i];
}

void decay_floor(double* x, double amount, std::size_t n) {
    const __m256d vamount = _mm256_set1_pd(amount);
    const __m256d vzero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d t = _mm256_sub_pd(_mm256_loadu_pd(x + i), vamount);
        _mm256_storeu_pd(x + i, _mm256_max_pd(t, vzero));
    }
    for (; i < n; ++i) {
        const double t = x[i] - amount;
        x[i] = t > 0.0 ? t : 0.0;
    }
}

double sum(const double* x, std::size_t n) {
    __m256d vacc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vacc = _mm256_add_pd(vacc, _mm256_loadu_pd(x + i));
    // combine as (a0 + a1) + (a2 + a3), matching the scalar reference
    const __m128d lo = _mm256_castpd256_pd128(vacc);
    const __m128d hi = _mm256_extractf128_pd(vacc, 1);
    const double a01 = _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
    const double a23 = _mm_cvtsd_f64(_mm_add_sd(hi, _mm_unpackhi_pd(hi, hi)));
    double s = a01 + a23;
    for (; i < n; ++i) s += x[i];
    return s;
}

namespace {

double horizontal_max(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d m2 = _mm_max_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_max_sd(m2, _mm_unpackhi_pd(m2, m2)));
}

double horizontal_min(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d m2 = _mm_min_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_min_sd(m2, _mm_unpackhi_pd(m2, m2)));
}

// Appends indices i in [begin, n) with x[i] == needle, ascending.
std::size_t collect_equal(const double* x, std::size_t n, double needle,
                          std::uint32_t* ties) {
    const __m256d vneedle = _mm256_set1_pd(needle);
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        int mask = _mm256_movemask_pd(
            _mm256_cmp_pd(_mm256_loadu_pd(x + i), vneedle, _CMP_EQ_OQ));
        while (mask) {
            const int bit = __builtin_ctz(static_cast<unsigned>(mask));
            ties[count++] = static_cast<std::uint32_t>(i + bit);
            mask &= mask - 1;
        }
    }
    for (; i < n; ++i)
        if (x[i] == needle) ties[count++] = static_cast<std::uint32_t>(i);
    return count;
}

}  // namespace

std::size_t collect_max(const double* x, std::size_t n, std::uint32_t* ties) {
    assert(n > 0);
    double m;
    std::size_t i = 0;
    if (n >= 4) {
        __m256d vm = _mm256_loadu_pd(x);
        for (i = 4; i + 4 <= n; i += 4) vm = _mm256_max_pd(vm, _mm256_loadu_pd(x + i));
        m = horizontal_max(vm);
    } else {
        m = x[0];
        i = 1;
    }
    for (; i < n; ++i)
        if (x[i] > m) m = x[i];
    return collect_equal(x, n, m, ties);
}

std::size_t collect_min(const double* x, std::size_t n, std::uint32_t* ties) {
    assert(n > 0);
    double m;
    std::size_t i = 0;
    if (n >= 4) {
        __m256d vm = _mm256_loadu_pd(x);
        for (i = 4; i + 4 <= n; i += 4) vm = _mm256_min_pd(vm, _mm256_loadu_pd(x + i));
        m = horizontal_min(vm);
    } else {
        m = x[0];
        i = 1;
    }
    for (; i < n; ++i)
        if (x[i] < m) m = x[i];
    return collect_equal(x, n, m, ties);
}

IndexedValue ect_argmin(const double* ready, const double* capacity,
                        double length, std::size_t n) {
    assert(n > 0);
    std::size_t i = 0;
    double best;
    std::size_t best_index;
    if (n >= 4) {
        const __m256d vlen = _mm256_set1_pd(length);
        __m256d vbest = _mm256_add_pd(_mm256_loadu_pd(ready),
                                      _mm256_div_pd(vlen, _mm256_loadu_pd(capacity)));
        __m256d vbesti = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
        __m256d vidx = _mm256_setr_pd(4.0, 5.0, 6.0, 7.0);
        const __m256d vfour = _mm256_set1_pd(4.0);
        for (i = 4; i + 4 <= n; i += 4) {
            const __m256d v = _mm256_add_pd(
                _mm256_loadu_pd(ready + i),
                _mm256_div_pd(vlen, _mm256_loadu_pd(capacity + i)));
            const __m256d lt = _mm256_cmp_pd(v, vbest, _CMP_LT_OQ);
            vbest = _mm256_blendv_pd(vbest, v, lt);
            vbesti = _mm256_blendv_pd(vbesti, vidx, lt);
            vidx = _mm256_add_pd(vidx, vfour);
        }
        // each lane holds the earliest minimum of its slot class; pick the
        // smallest value and, among equal values, the smallest index
        alignas(32) double vals[4];
        alignas(32) double idxs[4];
        _mm256_store_pd(vals, vbest);
        _mm256_store_pd(idxs, vbesti);
        best = vals[0];
        best_index = static_cast<std::size_t>(idxs[0]);
        for (int lane = 1; lane < 4; ++lane) {
            const auto lane_index = static_cast<std::size_t>(idxs[lane]);
            if (vals[lane] < best ||
                (vals[lane] == best && lane_index < best_index)) {
                best = vals[lane];
                best_index = lane_index;
            }
        }
    } else {
        best = ready[0] + length / capacity[0];
        best_index = 0;
        i = 1;
    }
    for (; i < n; ++i) {
        const double v = ready[i] + length / capacity[i];
        if (v < best) {
            best = v;
            best_index = i;
        }
    }
    return {best_index, best};
}

}  // namespace gridsched::kern::avx2

#endif  // x86-64
