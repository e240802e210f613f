#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace hornmx {

using Complex = std::complex<double>;

namespace detail {

// Lanczos, g = 7, n = 9.
inline constexpr double lanczos_g = 7.0;
inline constexpr std::array<double, 9> lanczos_coef = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// log Gamma(z) for Re z >= 0.5
inline Complex lanczos_lgamma(Complex z) {
    z -= 1.0;
    Complex a = lanczos_coef[0];
    for (int i = 1; i < 9; ++i) a += lanczos_coef[i] / (z + double(i));
    Complex t = z + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

inline bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace detail

/// Gamma(z). Infinite (NaN-free, returns inf) at the poles z = 0, -1, -2, ...
inline Complex gamma(Complex z) {
    using std::numbers::pi;
    if (detail::is_nonpositive_integer(z))
        return {std::numeric_limits<double>::infinity(), 0.0};
    if (z.real() < 0.5) return pi / (std::sin(pi * z) * gamma(1.0 - z));
    return std::exp(detail::lanczos_lgamma(z));
}

/// 1/Gamma(z), an entire function; exactly zero at the poles of Gamma.
inline Complex rgamma(Complex z) {
    if (detail::is_nonpositive_integer(z)) return 0.0;
    Complex prod = 1.0;
    while (z.real() < 0.5) {
        prod *= z;
        z += 1.0;
    }
    return prod * std::exp(-detail::lanczos_lgamma(z));
}

}  // namespace hornmx
