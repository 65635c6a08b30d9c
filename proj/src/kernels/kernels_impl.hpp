// kernels_impl.hpp — Internal declarations of the per-backend kernel bodies.

#pragma once

#include "corrbath/kernels.hpp"

namespace corrbath::kernels::detail {

MinMax fourier_symbol_minmax_scalar(double c0, std::span<const double> a,
                                    std::span<const double> b, int grid_size);
std::complex<double> phasor_weighted_sum_scalar(std::span<const double> weights,
                                                std::span<const double> phases);

#if defined(CORRBATH_BUILD_AVX2)
MinMax fourier_symbol_minmax_avx2(double c0, std::span<const double> a,
                                  std::span<const double> b, int grid_size);
std::complex<double> phasor_weighted_sum_avx2(std::span<const double> weights,
                                              std::span<const double> phases);
#endif

void validate_symbol_args(std::span<const double> a, std::span<const double> b,
                          int grid_size);
void validate_phasor_args(std::span<const double> weights,
                          std::span<const double> phases);

}  // namespace corrbath::kernels::detail
