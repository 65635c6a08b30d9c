// kernels.hpp — Data-parallel arithmetic kernels behind the spectral models
// and the Toeplitz symbol scan. Scalar reference implementations plus an AVX2
// variant selected at runtime; both are exposed for equivalence testing.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace corrbath::kernels {

struct MinMax {
    double min;
    double max;
};

/// Scans the real Fourier series
///   f(lambda) = c0 + 2 * sum_{m=1}^{M} (a[m-1] cos(m lambda) + b[m-1] sin(m lambda))
/// on the uniform grid lambda_i = 2 pi i / grid_size, i in [0, grid_size),
/// returning the grid minimum and maximum.
MinMax fourier_symbol_minmax(double c0, std::span<const double> a,
                             std::span<const double> b, int grid_size);

/// Accumulates sum_i w[i] * exp(i * theta[i]) over equally sized arrays.
std::complex<double> phasor_weighted_sum(std::span<const double> weights,
                                         std::span<const double> phases);

struct Implementation {
    const char* name;
    MinMax (*fourier_symbol_minmax)(double, std::span<const double>,
                                    std::span<const double>, int);
    std::complex<double> (*phasor_weighted_sum)(std::span<const double>,
                                                std::span<const double>);
};

/// All implementations compiled into this binary that the host CPU can run
/// (index 0 is always the scalar reference).
std::span<const Implementation> available_implementations();

/// Name of the implementation behind the public entry points. Honors the
/// CORRBATH_KERNEL_BACKEND environment variable ("scalar" or "avx2") when it
/// names a runnable backend.
const std::string& active_implementation();

}  // namespace corrbath::kernels
