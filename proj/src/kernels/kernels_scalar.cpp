// kernels_scalar.cpp — Portable reference implementations. These define the
// numeric contract the SIMD variants are tested against.

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "kernels_impl.hpp"

namespace corrbath::kernels::detail {

void validate_symbol_args(std::span<const double> a, std::span<const double> b,
                          int grid_size) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("fourier_symbol_minmax: cosine/sine coefficient lengths differ");
    }
    if (grid_size < 1) {
        throw std::invalid_argument("fourier_symbol_minmax: grid_size must be >= 1");
    }
}

void validate_phasor_args(std::span<const double> weights,
                          std::span<const double> phases) {
    if (weights.size() != phases.size()) {
        throw std::invalid_argument("phasor_weighted_sum: array lengths differ");
    }
}

MinMax fourier_symbol_minmax_scalar(double c0, std::span<const double> a,
                                    std::span<const double> b, int grid_size) {
    validate_symbol_args(a, b, grid_size);
    const std::size_t m_count = a.size();
    double fmin = std::numeric_limits<double>::infinity();
    double fmax = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_size; ++i) {
        const double lambda = 2.0 * std::numbers::pi * static_cast<double>(i) /
                              static_cast<double>(grid_size);
        const double c1 = std::cos(lambda);
        const double s1 = std::sin(lambda);
        // cos(m lambda), sin(m lambda) by angle addition
        double cm = c1, sm = s1;
        double acc = 0.0;
        for (std::size_t m = 0; m < m_count; ++m) {
            acc += a[m] * cm + b[m] * sm;
            const double cn = cm * c1 - sm * s1;
            sm = sm * c1 + cm * s1;
            cm = cn;
        }
        const double f = c0 + 2.0 * acc;
        fmin = std::min(fmin, f);
        fmax = std::max(fmax, f);
    }
    return {fmin, fmax};
}

std::complex<double> phasor_weighted_sum_scalar(std::span<const double> weights,
                                                std::span<const double> phases) {
    validate_phasor_args(weights, phases);
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        re += weights[i] * std::cos(phases[i]);
        im += weights[i] * std::sin(phases[i]);
    }
    return {re, im};
}

}  // namespace corrbath::kernels::detail
