#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "convergence.hpp"

namespace hornmx {

enum class RegionPolicy { enforce, warn, ignore };

struct EvalOptions {
    int max_diagonal = 80;
    double rel_tol = 1e-12;
    int stall_diagonals = 3;
    RegionPolicy region_policy = RegionPolicy::warn;
    int drift_interval = 16;  // 0 disables the direct-coefficient drift check
};

struct SeriesResult {
    ComplexMatrix value;
    int diagonals_used = 0;
    double tail_estimate = 0.0;
    bool converged = false;
    RegionVerdict region_verdict = RegionVerdict::unknown;
    double max_drift = 0.0;  // largest relative gap between recurrence and direct coefficient
};

/// Per-term modifiers: term = left(m,n) * scalar(m,n) * C_{m,n} x^{m-x_shift} y^{n-y_shift} * right(m,n).
/// Terms with m < x_shift or n < y_shift are skipped.
struct TermWeights {
    int x_shift = 0;
    int y_shift = 0;
    std::function<double(long, long)> scalar;
    std::function<ComplexMatrix(long, long)> left;
    std::function<ComplexMatrix(long, long)> right;
};

namespace detail {

inline void check_options(const EvalOptions& o) {
    if (o.max_diagonal < 1) throw DomainError("max_diagonal must be >= 1");
    if (!(o.rel_tol > 0)) throw DomainError("rel_tol must be > 0");
    if (o.stall_diagonals < 1) throw DomainError("stall_diagonals must be >= 1");
}

inline Eigen::Index param_dim(const HornSpec& spec, const ParamSet& params) {
    auto it = params.find(spec.params.front());
    if (it == params.end()) throw DomainError(spec.name + ": parameter " + std::string(param_name(spec.params.front())) + " missing");
    Eigen::Index r = it->second.rows();
    for (ParamId p : spec.params) {
        auto jt = params.find(p);
        if (jt == params.end()) throw DomainError(spec.name + ": parameter " + std::string(param_name(p)) + " missing");
        if (jt->second.rows() != r || jt->second.cols() != r)
            throw DomainError(spec.name + ": parameter " + std::string(param_name(p)) + " has wrong dimension");
    }
    return r;
}

}  // namespace detail

inline RegionVerdict point_region(const HornSpec& spec, Complex x, Complex y) {
    return region_contains(spec, std::abs(x), std::abs(y));
}

/// Diagonal-ordered summation of sum C_{m,n} x^m y^n with optional term weights.
inline SeriesResult sum_series(const HornSpec& spec, const ParamSet& params, Complex x, Complex y,
                               const EvalOptions& opts = {}, const TermWeights& w = {}) {
    detail::check_options(opts);
    const Eigen::Index r = detail::param_dim(spec, params);
    SeriesResult res;
    if (opts.region_policy != RegionPolicy::ignore) {
        res.region_verdict = point_region(spec, x, y);
        if (opts.region_policy == RegionPolicy::enforce && res.region_verdict == RegionVerdict::outside)
            throw RegionError(spec.name + ": point outside the convergence region");
    }

    std::vector<PochhammerTable> tables;
    tables.reserve(spec.factors.size());
    for (const auto& f : spec.factors) tables.emplace_back(params.at(f.param), f.inverted);

    const bool x_zero = x == Complex(0.0), y_zero = y == Complex(0.0);
    const double lx = x_zero ? 0.0 : std::log(std::abs(x)), ax = x_zero ? 0.0 : std::arg(x);
    const double ly = y_zero ? 0.0 : std::log(std::abs(y)), ay = y_zero ? 0.0 : std::arg(y);

    ComplexMatrix partial = ComplexMatrix::Zero(r, r);
    ComplexMatrix diag_sum(r, r), prod(r, r), tmp(r, r);
    const int min_d = w.x_shift + w.y_shift;
    int quiet = 0;
    double prev_norm = -1.0, last_norm = 0.0;

    for (int d = 0; d < opts.max_diagonal; ++d) {
        diag_sum.setZero();
        for (long m = 0; m <= d; ++m) {
            const long n = d - m;
            if (m < w.x_shift || n < w.y_shift) continue;
            const long ex = m - w.x_shift, ey = n - w.y_shift;
            if ((x_zero && ex > 0) || (y_zero && ey > 0)) continue;
            double sw = w.scalar ? w.scalar(m, n) : 1.0;
            if (sw == 0.0) continue;

            double logc = -std::lgamma(double(m) + 1.0) - std::lgamma(double(n) + 1.0);
            for (size_t f = 0; f < tables.size(); ++f) {
                const long k = spec.factors[f].index(m, n);
                const ComplexMatrix& nk = tables[f].normalized(k);
                if (f == 0) {
                    prod = nk;
                } else {
                    tmp.noalias() = prod * nk;
                    prod.swap(tmp);
                }
                logc += tables[f].log_scale(k);
            }
            double logt = logc + (ex ? double(ex) * lx : 0.0) + (ey ? double(ey) * ly : 0.0);
            Complex s = std::polar(std::exp(logt), double(ex) * ax + double(ey) * ay) * sw;
            if (w.left || w.right) {
                ComplexMatrix t = s * prod;
                if (w.left) t = w.left(m, n) * t;
                if (w.right) t = t * w.right(m, n);
                diag_sum += t;
            } else {
                diag_sum += s * prod;
            }

            if (opts.drift_interval > 0 && d > 0 && d % opts.drift_interval == 0 && m == d / 2 &&
                std::abs(logc) < 600.0) {
                ComplexMatrix direct = coefficient(spec, params, m, n);
                double dn = direct.norm();
                if (dn > 0 && std::isfinite(dn))
                    res.max_drift = std::max(res.max_drift, (direct - std::exp(logc) * prod).norm() / dn);
            }
        }
        partial += diag_sum;
        res.diagonals_used = d + 1;

        prev_norm = last_norm;
        last_norm = diag_sum.norm();
        if (d < min_d) continue;
        const double pn = partial.norm();
        quiet = (last_norm <= opts.rel_tol * pn) ? quiet + 1 : 0;
        double ratio;
        if (d == min_d || prev_norm <= 0.0)
            ratio = last_norm == 0.0 ? 0.0 : 0.9;
        else
            ratio = std::clamp(last_norm / prev_norm, 0.0, 0.9);
        res.tail_estimate = last_norm / (1.0 - ratio);
        if (quiet >= opts.stall_diagonals && res.tail_estimate <= opts.rel_tol * pn) {
            res.converged = true;
            break;
        }
    }
    res.value = std::move(partial);
    if (!all_finite(res.value)) res.converged = false;
    return res;
}

inline SeriesResult evaluate(const HornSpec& spec, const ParamSet& params, Complex x, Complex y,
                             const EvalOptions& opts = {}) {
    return sum_series(spec, params, x, y, opts);
}

inline double falling_factorial(double v, int k) {
    double p = 1.0;
    for (int j = 0; j < k; ++j) p *= (v - j);
    return p;
}

/// Termwise d^{p+q}/dx^p dy^q of the series, with diagnostics.
inline SeriesResult derivative_series(const HornSpec& spec, const ParamSet& params, Complex x, Complex y, int p,
                                      int q, const EvalOptions& opts = {}) {
    if (p < 0 || q < 0 || p + q > 4) throw DomainError("evaluate_derivative: need p, q >= 0 and p + q <= 4");
    TermWeights w;
    w.x_shift = p;
    w.y_shift = q;
    if (p + q > 0)
        w.scalar = [p, q](long m, long n) { return falling_factorial(double(m), p) * falling_factorial(double(n), q); };
    return sum_series(spec, params, x, y, opts, w);
}

inline ComplexMatrix evaluate_derivative(const HornSpec& spec, const ParamSet& params, Complex x, Complex y, int p,
                                         int q, const EvalOptions& opts = {}) {
    return derivative_series(spec, params, x, y, p, q, opts).value;
}

}  // namespace hornmx
