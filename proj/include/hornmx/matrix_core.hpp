#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"
#include "scalar_gamma.hpp"

namespace hornmx {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double default_condition_ceiling = 1e8;

inline ComplexMatrix identity(Eigen::Index r) { return ComplexMatrix::Identity(r, r); }

inline ComplexMatrix scalar_matrix(Complex v) {
    ComplexMatrix m(1, 1);
    m(0, 0) = v;
    return m;
}

inline ComplexMatrix diag(std::initializer_list<Complex> d) {
    ComplexMatrix m = ComplexMatrix::Zero(Eigen::Index(d.size()), Eigen::Index(d.size()));
    Eigen::Index i = 0;
    for (Complex v : d) {
        m(i, i) = v;
        ++i;
    }
    return m;
}

inline bool all_finite(const ComplexMatrix& m) {
    for (Eigen::Index i = 0; i < m.size(); ++i)
        if (!std::isfinite(m.data()[i].real()) || !std::isfinite(m.data()[i].imag())) return false;
    return true;
}

inline double operator_two_norm(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    if (m.rows() == 1) return std::abs(m(0, 0));
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

inline double min_singular_value(const ComplexMatrix& m) {
    if (m.rows() == 1) return std::abs(m(0, 0));
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(svd.singularValues().size() - 1);
}

struct SpectralData {
    ComplexVector eigenvalues;
    ComplexMatrix eigenvectors;
    ComplexMatrix inverse_eigenvectors;
    double eigenvector_condition = 1.0;

    Eigen::Index dim() const { return eigenvalues.size(); }

    /// V diag(f(lambda)) V^{-1}
    template <class F>
    ComplexMatrix apply(F&& f) const {
        const Eigen::Index r = dim();
        if (r == 1) return scalar_matrix(f(eigenvalues(0)));
        ComplexMatrix scaled = eigenvectors;
        for (Eigen::Index j = 0; j < r; ++j) scaled.col(j) *= f(eigenvalues(j));
        return scaled * inverse_eigenvectors;
    }
};

/// Eigen-decomposition with eigenvalues sorted by descending real part, ties by
/// descending imaginary part. Throws DefectiveMatrix if cond(V) > ceiling.
inline SpectralData spectral_decompose(const ComplexMatrix& m, double tol = 1e-10,
                                       double condition_ceiling = default_condition_ceiling) {
    if (m.rows() != m.cols() || m.rows() == 0) throw DomainError("spectral_decompose: matrix must be square");
    const Eigen::Index r = m.rows();
    SpectralData out;
    if (r == 1) {
        out.eigenvalues = ComplexVector::Constant(1, m(0, 0));
        out.eigenvectors = identity(1);
        out.inverse_eigenvectors = identity(1);
        return out;
    }

    // Exactly diagonal input keeps the unit eigenvectors, so diagonal functions are entrywise.
    bool diagonal = true;
    for (Eigen::Index i = 0; i < r && diagonal; ++i)
        for (Eigen::Index j = 0; j < r; ++j)
            if (i != j && m(i, j) != Complex(0.0)) {
                diagonal = false;
                break;
            }

    ComplexVector vals;
    ComplexMatrix vecs;
    if (diagonal) {
        vals = m.diagonal();
        vecs = identity(r);
    } else {
        Eigen::ComplexEigenSolver<ComplexMatrix> es(m);
        if (es.info() != Eigen::Success) throw DefectiveMatrix("eigen-solver failed", std::numeric_limits<double>::infinity());
        vals = es.eigenvalues();
        vecs = es.eigenvectors();
        for (Eigen::Index j = 0; j < r; ++j) {
            double nj = vecs.col(j).norm();
            if (nj > 0) vecs.col(j) /= nj;
        }
    }

    std::vector<Eigen::Index> order(static_cast<size_t>(r));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        if (vals(a).real() != vals(b).real()) return vals(a).real() > vals(b).real();
        return vals(a).imag() > vals(b).imag();
    });
    out.eigenvalues.resize(r);
    out.eigenvectors.resize(r, r);
    for (Eigen::Index j = 0; j < r; ++j) {
        out.eigenvalues(j) = vals(order[size_t(j)]);
        out.eigenvectors.col(j) = vecs.col(order[size_t(j)]);
    }

    Eigen::JacobiSVD<ComplexMatrix> svd(out.eigenvectors, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double smin = sv(r - 1);
    out.eigenvector_condition = smin > 0 ? sv(0) / smin : std::numeric_limits<double>::infinity();
    if (!(out.eigenvector_condition <= condition_ceiling))
        throw DefectiveMatrix("matrix is defective or too close to defective (eigenvector condition " +
                                  std::to_string(out.eigenvector_condition) + ")",
                              out.eigenvector_condition);
    out.inverse_eigenvectors = out.eigenvectors.partialPivLu().inverse();

    ComplexMatrix resid = m * out.eigenvectors - out.eigenvectors * out.eigenvalues.asDiagonal();
    double scale = std::max(operator_two_norm(m), 1e-300);
    if (operator_two_norm(resid) > std::max(tol, 1e3 * std::numeric_limits<double>::epsilon() * out.eigenvector_condition) * scale)
        throw DefectiveMatrix("eigen-decomposition residual too large", out.eigenvector_condition);
    return out;
}

enum class ScalarFunctionKind { exp, log, gamma, reciprocal_gamma, power };

struct ScalarFunction {
    ScalarFunctionKind kind;
    Complex base = 0.0;  // used by power: base^M

    static ScalarFunction exp() { return {ScalarFunctionKind::exp}; }
    static ScalarFunction log() { return {ScalarFunctionKind::log}; }
    static ScalarFunction gamma() { return {ScalarFunctionKind::gamma}; }
    static ScalarFunction reciprocal_gamma() { return {ScalarFunctionKind::reciprocal_gamma}; }
    static ScalarFunction power(Complex t) { return {ScalarFunctionKind::power, t}; }
};

namespace detail {

inline bool on_negative_real_axis(Complex z) { return z.imag() == 0.0 && z.real() <= 0.0; }

inline Complex apply_scalar(const ScalarFunction& fn, Complex lam) {
    switch (fn.kind) {
        case ScalarFunctionKind::exp: return std::exp(lam);
        case ScalarFunctionKind::log:
            if (on_negative_real_axis(lam)) throw DomainError("log: eigenvalue on the closed negative real axis");
            return std::log(lam);
        case ScalarFunctionKind::gamma:
            if (is_nonpositive_integer(lam)) throw DomainError("gamma: eigenvalue at a pole");
            return hornmx::gamma(lam);
        case ScalarFunctionKind::reciprocal_gamma: return rgamma(lam);
        case ScalarFunctionKind::power:
            if (fn.base == Complex(1.0)) return 1.0;
            if (lam == Complex(0.0)) return 1.0;
            if (on_negative_real_axis(fn.base)) throw DomainError("power: base on the closed negative real axis");
            return std::exp(lam * std::log(fn.base));
    }
    return 0.0;
}

}  // namespace detail

inline ComplexMatrix apply_scalar_function(const SpectralData& sd, const ScalarFunction& fn) {
    return sd.apply([&](Complex lam) { return detail::apply_scalar(fn, lam); });
}

inline ComplexMatrix apply_scalar_function(const ComplexMatrix& m, const ScalarFunction& fn, double tol = 1e-10) {
    if (fn.kind == ScalarFunctionKind::power && fn.base == Complex(1.0)) return identity(m.rows());
    if (fn.kind == ScalarFunctionKind::power && m.isZero(0.0)) return identity(m.rows());
    return apply_scalar_function(spectral_decompose(m, tol), fn);
}

/// t^M for scalar t off the closed negative real axis.
inline ComplexMatrix matrix_power(Complex t, const ComplexMatrix& m) {
    return apply_scalar_function(m, ScalarFunction::power(t));
}

inline ComplexMatrix matrix_gamma(const ComplexMatrix& m) { return apply_scalar_function(m, ScalarFunction::gamma()); }
inline ComplexMatrix matrix_rgamma(const ComplexMatrix& m) {
    return apply_scalar_function(m, ScalarFunction::reciprocal_gamma());
}

struct SpectrumBounds {
    double alpha;
    double beta;
    bool positive_stable;
};

inline SpectrumBounds spectrum_bounds(const ComplexMatrix& m) {
    ComplexVector ev;
    if (m.rows() == 1)
        ev = ComplexVector::Constant(1, m(0, 0));
    else
        ev = Eigen::ComplexEigenSolver<ComplexMatrix>(m, false).eigenvalues();
    double alpha = -std::numeric_limits<double>::infinity();
    double beta = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        alpha = std::max(alpha, ev(i).real());
        beta = std::min(beta, ev(i).real());
    }
    return {alpha, beta, beta > 0};
}

/// First k in [0, k_max] for which C + kI has min singular value <= tol, if any.
inline std::optional<long> shifted_inverse_guard(const ComplexMatrix& c, long k_max, double tol = 1e-12) {
    const ComplexMatrix id = identity(c.rows());
    for (long k = 0; k <= k_max; ++k)
        if (min_singular_value(c + double(k) * id) <= tol) return k;
    return std::nullopt;
}

inline double relative_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
    double s = std::max({a.norm(), b.norm(), 1e-300});
    return (a - b).norm() / s;
}

}  // namespace hornmx
