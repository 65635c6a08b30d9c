// kernels_avx2.cpp — AVX2+FMA variants of the numeric kernels. Compiled only
// on x86-64; selected at runtime after a CPUID check.

#if defined(CORRBATH_BUILD_AVX2)

#include <immintrin.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "kernels_impl.hpp"

namespace corrbath::kernels::detail {

namespace {

// Argument reduction constants: pi/2 split as in fdlibm's medium path.
// k * kPio2Hi is exact for |k| < 2^20, which covers |x| up to ~1.6e6.
constexpr double kPio2Hi = 0x1.921fb544p+0;
constexpr double kPio2Lo = 0x1.0b4611a626331p-34;
constexpr double kTwoOverPi = 0x1.45f306dc9c883p-1;
constexpr double kMaxReducible = 1.6e6;

// Taylor coefficients on |r| <= pi/4; truncation below 1e-19.
constexpr double S3 = -1.0 / 6.0;
constexpr double S5 = 1.0 / 120.0;
constexpr double S7 = -1.0 / 5040.0;
constexpr double S9 = 1.0 / 362880.0;
constexpr double S11 = -1.0 / 39916800.0;
constexpr double S13 = 1.0 / 6227020800.0;
constexpr double S15 = -1.0 / 1307674368000.0;
constexpr double S17 = 1.0 / 355687428096000.0;
constexpr double S19 = -1.0 / 121645100408832000.0;

constexpr double C2 = -1.0 / 2.0;
constexpr double C4 = 1.0 / 24.0;
constexpr double C6 = -1.0 / 720.0;
constexpr double C8 = 1.0 / 40320.0;
constexpr double C10 = -1.0 / 3628800.0;
constexpr double C12 = 1.0 / 479001600.0;
constexpr double C14 = -1.0 / 87178291200.0;
constexpr double C16 = 1.0 / 20922789888000.0;
constexpr double C18 = -1.0 / 6402373705728000.0;

inline __m256d poly_sin(__m256d r, __m256d r2) {
    __m256d p = _mm256_set1_pd(S19);
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(S17));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(S15));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(S13));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(S11));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(S9));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(S7));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(S5));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(S3));
    return _mm256_fmadd_pd(_mm256_mul_pd(p, r2), r, r);
}

inline __m256d poly_cos(__m256d r2) {
    __m256d p = _mm256_set1_pd(C18);
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(C16));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(C14));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(C12));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(C10));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(C8));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(C6));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(C4));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(C2));
    return _mm256_fmadd_pd(p, r2, _mm256_set1_pd(1.0));
}

// Vector sin/cos with quadrant reduction. Valid for |x| <= kMaxReducible.
inline void sincos4(__m256d x, __m256d* sin_out, __m256d* cos_out) {
    const __m256d k = _mm256_round_pd(
        _mm256_mul_pd(x, _mm256_set1_pd(kTwoOverPi)),
        _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kPio2Hi), x);
    r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kPio2Lo), r);

    const __m256d r2 = _mm256_mul_pd(r, r);
    const __m256d sp = poly_sin(r, r2);
    const __m256d cp = poly_cos(r2);

    const __m128i ki = _mm256_cvtpd_epi32(k);
    const __m128i bit0 = _mm_and_si128(ki, _mm_set1_epi32(1));
    const __m128i bit1 = _mm_and_si128(_mm_srli_epi32(ki, 1), _mm_set1_epi32(1));
    const __m128i ones = _mm_set1_epi32(1);

    const __m256i swap = _mm256_cvtepi32_epi64(_mm_cmpeq_epi32(bit0, ones));
    const __m256i ssign = _mm256_cvtepi32_epi64(_mm_cmpeq_epi32(bit1, ones));
    const __m256i csign = _mm256_cvtepi32_epi64(
        _mm_cmpeq_epi32(_mm_xor_si128(bit0, bit1), ones));

    const __m256d signbit = _mm256_set1_pd(-0.0);
    const __m256d s_base = _mm256_blendv_pd(sp, cp, _mm256_castsi256_pd(swap));
    const __m256d c_base = _mm256_blendv_pd(cp, sp, _mm256_castsi256_pd(swap));
    *sin_out = _mm256_xor_pd(
        s_base, _mm256_and_pd(_mm256_castsi256_pd(ssign), signbit));
    *cos_out = _mm256_xor_pd(
        c_base, _mm256_and_pd(_mm256_castsi256_pd(csign), signbit));
}

inline double hmin(__m256d v) {
    alignas(32) double lane[4];
    _mm256_store_pd(lane, v);
    return std::min(std::min(lane[0], lane[1]), std::min(lane[2], lane[3]));
}

inline double hmax(__m256d v) {
    alignas(32) double lane[4];
    _mm256_store_pd(lane, v);
    return std::max(std::max(lane[0], lane[1]), std::max(lane[2], lane[3]));
}

inline double hsum(__m256d v) {
    alignas(32) double lane[4];
    _mm256_store_pd(lane, v);
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace

MinMax fourier_symbol_minmax_avx2(double c0, std::span<const double> a,
                                  std::span<const double> b, int grid_size) {
    validate_symbol_args(a, b, grid_size);
    const std::size_t m_count = a.size();
    const double step = 2.0 * std::numbers::pi / static_cast<double>(grid_size);

    __m256d vmin = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    __m256d vmax = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
    double smin = std::numeric_limits<double>::infinity();
    double smax = -std::numeric_limits<double>::infinity();

    int i = 0;
    for (; i + 4 <= grid_size; i += 4) {
        const __m256d lambda = _mm256_mul_pd(
            _mm256_set_pd(i + 3.0, i + 2.0, i + 1.0, i + 0.0),
            _mm256_set1_pd(step));
        __m256d c1, s1;
        sincos4(lambda, &s1, &c1);
        __m256d cm = c1, sm = s1;
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t m = 0; m < m_count; ++m) {
            const __m256d am = _mm256_set1_pd(a[m]);
            const __m256d bm = _mm256_set1_pd(b[m]);
            acc = _mm256_fmadd_pd(am, cm, acc);
            acc = _mm256_fmadd_pd(bm, sm, acc);
            const __m256d cn =
                _mm256_fnmadd_pd(sm, s1, _mm256_mul_pd(cm, c1));
            sm = _mm256_fmadd_pd(sm, c1, _mm256_mul_pd(cm, s1));
            cm = cn;
        }
        const __m256d f = _mm256_fmadd_pd(_mm256_set1_pd(2.0), acc,
                                          _mm256_set1_pd(c0));
        vmin = _mm256_min_pd(vmin, f);
        vmax = _mm256_max_pd(vmax, f);
    }
    for (; i < grid_size; ++i) {
        const double lambda = step * static_cast<double>(i);
        const double c1 = std::cos(lambda);
        const double s1 = std::sin(lambda);
        double cm = c1, sm = s1, acc = 0.0;
        for (std::size_t m = 0; m < m_count; ++m) {
            acc += a[m] * cm + b[m] * sm;
            const double cn = cm * c1 - sm * s1;
            sm = sm * c1 + cm * s1;
            cm = cn;
        }
        const double f = c0 + 2.0 * acc;
        smin = std::min(smin, f);
        smax = std::max(smax, f);
    }
    return {std::min(hmin(vmin), smin), std::max(hmax(vmax), smax)};
}

std::complex<double> phasor_weighted_sum_avx2(std::span<const double> weights,
                                              std::span<const double> phases) {
    validate_phasor_args(weights, phases);
    const std::size_t n = weights.size();

    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d th = _mm256_loadu_pd(phases.data() + i);
        // Reduction constants only cover moderate arguments; defer the rest.
        const __m256d athr = _mm256_set1_pd(kMaxReducible);
        const __m256d absth = _mm256_andnot_pd(_mm256_set1_pd(-0.0), th);
        if (_mm256_movemask_pd(_mm256_cmp_pd(absth, athr, _CMP_GT_OQ)) != 0) break;
        const __m256d w = _mm256_loadu_pd(weights.data() + i);
        __m256d s, c;
        sincos4(th, &s, &c);
        acc_re = _mm256_fmadd_pd(w, c, acc_re);
        acc_im = _mm256_fmadd_pd(w, s, acc_im);
    }
    double re = hsum(acc_re);
    double im = hsum(acc_im);
    for (; i < n; ++i) {
        re += weights[i] * std::cos(phases[i]);
        im += weights[i] * std::sin(phases[i]);
    }
    return {re, im};
}

}  // namespace corrbath::kernels::detail

#endif  // CORRBATH_BUILD_AVX2
