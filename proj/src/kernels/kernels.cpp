// kernels.cpp — Runtime backend selection for the numeric kernels.

#include "corrbath/kernels.hpp"

#include <cstdlib>
#include <vector>

#include "kernels_impl.hpp"

namespace corrbath::kernels {

namespace {

std::vector<Implementation> build_implementations() {
    std::vector<Implementation> impls;
    impls.push_back({"scalar", detail::fourier_symbol_minmax_scalar,
                     detail::phasor_weighted_sum_scalar});
#if defined(CORRBATH_BUILD_AVX2)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        impls.push_back({"avx2", detail::fourier_symbol_minmax_avx2,
                         detail::phasor_weighted_sum_avx2});
    }
#endif
    return impls;
}

const std::vector<Implementation>& implementations() {
    static const std::vector<Implementation> impls = build_implementations();
    return impls;
}

const Implementation& select_active() {
    const auto& impls = implementations();
    if (const char* env = std::getenv("CORRBATH_KERNEL_BACKEND")) {
        const std::string want(env);
        for (const auto& impl : impls) {
            if (want == impl.name) return impl;
        }
    }
    return impls.back();  // fastest runnable backend
}

const Implementation& active() {
    static const Implementation& impl = select_active();
    return impl;
}

}  // namespace

std::span<const Implementation> available_implementations() {
    return implementations();
}

const std::string& active_implementation() {
    static const std::string name = active().name;
    return name;
}

MinMax fourier_symbol_minmax(double c0, std::span<const double> a,
                             std::span<const double> b, int grid_size) {
    return active().fourier_symbol_minmax(c0, a, b, grid_size);
}

std::complex<double> phasor_weighted_sum(std::span<const double> weights,
                                         std::span<const double> phases) {
    return active().phasor_weighted_sum(weights, phases);
}

}  // namespace corrbath::kernels
