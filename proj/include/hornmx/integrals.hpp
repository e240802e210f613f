#pragma once

#include <string>

#include "catalog.hpp"
#include "quadrature.hpp"

namespace hornmx {

namespace detail {

inline void require_positive_stable(const ComplexMatrix& m, const std::string& what) {
    if (!spectrum_bounds(m).positive_stable) throw HypothesisViolation(what + " must be positive stable");
}

inline void require_commute(const ComplexMatrix& a, const ComplexMatrix& b, const std::string& what) {
    double scale = std::max(1.0, operator_two_norm(a) * operator_two_norm(b));
    if (operator_two_norm(a * b - b * a) > 1e-10 * scale) throw HypothesisViolation(what + " required");
}

// base^{-M} for real base > 0 from a cached decomposition of M
inline ComplexMatrix power_from(const SpectralData& sd, double base, double sign) {
    const double lb = std::log(base);
    return sd.apply([&](Complex lam) { return std::exp(sign * lam * lb); });
}

inline double beta_of(const ComplexMatrix& m) { return spectrum_bounds(m).beta; }

}  // namespace detail

/// Integral form of G1, G2, H3 or H4 times its Gamma prefactor, as printed.
inline QuadResult evaluate_integral_representation(const std::string& name, const ParamSet& params, double x,
                                                   double y, const QuadOptions& quad = {}) {
    using detail::power_from;
    auto P = [&](ParamId p) -> const ComplexMatrix& {
        auto it = params.find(p);
        if (it == params.end()) throw DomainError(name + ": parameter " + std::string(param_name(p)) + " missing");
        return it->second;
    };
    if (name == "G1" || name == "G2") {
        const bool g2 = name == "G2";
        const ComplexMatrix& A = P(ParamId::A);
        const ComplexMatrix& B = P(ParamId::B);
        const ComplexMatrix& Bp = P(ParamId::Bp);
        const ComplexMatrix I = identity(A.rows());
        detail::require_positive_stable(A, "A");
        detail::require_positive_stable(B, "B");
        detail::require_positive_stable(Bp, "B'");
        detail::require_positive_stable(I - Bp, "I-B'");
        detail::require_positive_stable(I - B - Bp, "I-B-B'");
        detail::require_commute(B, Bp, "BB' = B'B");
        SpectralData sa = spectral_decompose(A), sb = spectral_decompose(B), sbb = spectral_decompose(B + Bp);
        SpectralData sap;
        if (g2) {
            const ComplexMatrix& Ap = P(ParamId::Ap);
            detail::require_positive_stable(Ap, "A'");
            sap = spectral_decompose(Ap);
        }
        auto f = [&](double t, double s) -> ComplexMatrix {
            ComplexMatrix lead = g2 ? ComplexMatrix(power_from(sa, 1.0 + x / t, -1.0) * power_from(sap, 1.0 + y * t, -1.0))
                                    : power_from(sa, 1.0 + x / t + y * t, -1.0);
            return lead * power_from(sb, t, 1.0) / t * power_from(sbb, s, -1.0);
        };
        QuadResult q = integrate_unit(f, detail::beta_of(B), detail::beta_of(I - B - Bp), quad);
        q.value = q.value * matrix_gamma(I - Bp) * matrix_rgamma(B) * matrix_rgamma(I - B - Bp);
        return q;
    }
    if (name == "H3") {
        const ComplexMatrix& A = P(ParamId::A);
        const ComplexMatrix& B = P(ParamId::B);
        const ComplexMatrix& C = P(ParamId::C);
        const ComplexMatrix I = identity(A.rows());
        detail::require_positive_stable(A, "A");
        detail::require_positive_stable(B, "B");
        detail::require_positive_stable(C, "C");
        detail::require_positive_stable(C - A, "C-A");
        detail::require_commute(A, B, "AB = BA");
        detail::require_commute(A, C, "AC = CA");
        SpectralData sb = spectral_decompose(B), sa = spectral_decompose(A), sca = spectral_decompose(C + A + I),
                     scm = spectral_decompose(C - A);
        auto f = [&](double t, double s) -> ComplexMatrix {
            return power_from(sb, 1.0 - y * t, -1.0) * power_from(sa, t, 1.0) / t *
                   power_from(sca, 1.0 + x * t * t / s, -1.0) * power_from(scm, s, 1.0) / s;
        };
        QuadResult q = integrate_unit(f, detail::beta_of(A), std::min(1.0, detail::beta_of(C - A)), quad);
        q.value = q.value * matrix_gamma(C) * matrix_rgamma(A) * matrix_rgamma(C - A);
        return q;
    }
    if (name == "H4") {
        const ComplexMatrix& A = P(ParamId::A);
        const ComplexMatrix& B = P(ParamId::B);
        const ComplexMatrix& C = P(ParamId::C);
        const ComplexMatrix& Cp = P(ParamId::Cp);
        const ComplexMatrix I = identity(A.rows());
        for (auto [m, s] : {std::pair{&A, "A"}, {&B, "B"}, {&C, "C"}, {&Cp, "C'"}})
            detail::require_positive_stable(*m, s);
        detail::require_positive_stable(C - A, "C-A");
        detail::require_positive_stable(Cp - B, "C'-B");
        const ComplexMatrix* all[] = {&A, &B, &C, &Cp};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) detail::require_commute(*all[i], *all[j], "pairwise commuting parameters");
        SpectralData sa = spectral_decompose(A), sca = spectral_decompose(C - A), sb = spectral_decompose(B),
                     scb = spectral_decompose(Cp - B);
        const double ba = detail::beta_of(A), bca = std::min(1.0, detail::beta_of(C - A));
        QuadOptions inner = quad;
        inner.abs_tol = 0.1 * quad.abs_tol;
        auto outer = [&](double u, double su) -> ComplexMatrix {
            const double w = 1.0 - u * y;
            auto g = [&](double t, double s) -> ComplexMatrix {
                return power_from(sa, t, 1.0) / t * power_from(sca, s, 1.0) / s *
                       (1.0 - t * x / (w * w));
            };
            ComplexMatrix it = integrate_unit(g, ba, bca, inner).value;
            return it * power_from(sb, u, 1.0) / u * power_from(scb, su, 1.0) / su *
                   power_from(sa, w, -1.0);
        };
        QuadResult q = integrate_unit(outer, detail::beta_of(B), std::min(1.0, detail::beta_of(Cp - B)), quad);
        q.value = q.value * matrix_gamma(C) * matrix_gamma(Cp) * matrix_rgamma(A) * matrix_rgamma(B) *
                  matrix_rgamma(C - A) * matrix_rgamma(Cp - B);
        return q;
    }
    throw UnknownFunction("no integral representation for " + name);
}

}  // namespace hornmx
