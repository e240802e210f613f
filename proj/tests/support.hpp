#pragma once

#include <cstdint>
#include <random>

#include <hornmx/matrix_core.hpp>

namespace hornmx::testing {

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return lo + (hi - lo) * double(g() >> 11) * 0x1.0p-53;
}

inline ComplexMatrix random_matrix(std::mt19937_64& g, Eigen::Index r, double scale = 1.0) {
    ComplexMatrix m(r, r);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < r; ++j) m(i, j) = Complex(uniform(g, -scale, scale), uniform(g, -scale, scale));
    return m;
}

// Spectrum shifted to real parts in [lo, hi].
inline ComplexMatrix random_shifted(std::mt19937_64& g, Eigen::Index r, double lo, double hi) {
    ComplexMatrix s = random_matrix(g, r) + 2.0 * identity(r);
    ComplexMatrix d = ComplexMatrix::Zero(r, r);
    for (Eigen::Index i = 0; i < r; ++i) d(i, i) = Complex(uniform(g, lo, hi), uniform(g, -0.3, 0.3));
    return s * d * s.inverse();
}

inline double rel(const ComplexMatrix& a, const ComplexMatrix& b) { return relative_difference(a, b); }

}  // namespace hornmx::testing
