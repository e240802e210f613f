#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "matrix_core.hpp"

namespace hornmx {

struct QuadOptions {
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    int max_intervals = 4000;
};

struct QuadResult {
    ComplexMatrix value;
    double error = 0.0;
    int intervals = 0;
};

using MatrixIntegrand = std::function<ComplexMatrix(double)>;

namespace detail {

struct Panel {
    double a, b;
    ComplexMatrix value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

// 7-point Gauss / 15-point Kronrod pair on [a, b]; error = Frobenius norm of the difference.
inline Panel gk15(const MatrixIntegrand& f, double a, double b) {
    using boost::math::quadrature::gauss;
    using boost::math::quadrature::gauss_kronrod;
    static const auto kx = gauss_kronrod<double, 15>::abscissa();
    static const auto kw = gauss_kronrod<double, 15>::weights();
    static const auto gw = gauss<double, 7>::weights();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    ComplexMatrix f0 = f(c);
    ComplexMatrix k = kw[0] * f0;
    ComplexMatrix g = gw[0] * f0;
    for (size_t i = 1; i < kx.size(); ++i) {
        ComplexMatrix s = f(c - h * kx[i]) + f(c + h * kx[i]);
        k += kw[i] * s;
        if (i % 2 == 0) g += gw[i / 2] * s;
    }
    k *= h;
    g *= h;
    return {a, b, k, (k - g).norm()};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod on [a, b]; the worst panel is bisected until the summed
/// error estimate meets max(abs_tol, rel_tol * |I|).
inline QuadResult integrate(const MatrixIntegrand& f, double a, double b, const QuadOptions& opts = {}) {
    std::priority_queue<detail::Panel> heap;
    detail::Panel first = detail::gk15(f, a, b);
    ComplexMatrix total = first.value;
    double err = first.error;
    heap.push(std::move(first));
    int count = 1;
    while (err > std::max(opts.abs_tol, opts.rel_tol * total.norm())) {
        if (count >= opts.max_intervals || !std::isfinite(err))
            throw QuadratureFailure("quadrature did not reach tolerance", err);
        detail::Panel worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        detail::Panel l = detail::gk15(f, worst.a, mid), r = detail::gk15(f, mid, worst.b);
        total += l.value + r.value - worst.value;
        err += l.error + r.error - worst.error;
        heap.push(std::move(l));
        heap.push(std::move(r));
        ++count;
    }
    // re-sum to shed accumulated cancellation in the running totals
    ComplexMatrix sum = ComplexMatrix::Zero(total.rows(), total.cols());
    double esum = 0.0;
    while (!heap.empty()) {
        sum += heap.top().value;
        esum += heap.top().error;
        heap.pop();
    }
    return {sum, esum, count};
}

/// f(t, 1 - t); the complement is passed separately so it keeps full precision near t = 1.
using UnitIntegrand = std::function<ComplexMatrix(double, double)>;

/// Integral over (0, 1) of an integrand with algebraic endpoint behaviour t^{b0-1} and
/// (1-t)^{b1-1}. Substitutes t = u^g0 on [0, 1/2] and 1-t = v^g1 on [1/2, 1] with
/// g = max(1, 1/b) so that the transformed integrand stays bounded.
inline QuadResult integrate_unit(const UnitIntegrand& f, double beta0, double beta1, const QuadOptions& opts = {}) {
    if (!(beta0 > 0) || !(beta1 > 0)) throw DomainError("integrate_unit: endpoint exponents must be integrable");
    const double g0 = std::max(1.0, 1.0 / beta0), g1 = std::max(1.0, 1.0 / beta1);
    QuadOptions half = opts;
    half.abs_tol = 0.5 * opts.abs_tol;
    auto left = [&](double u) -> ComplexMatrix {
        const double t = std::max(std::pow(u, g0), std::numeric_limits<double>::min());
        return (g0 * std::pow(u, g0 - 1.0)) * f(t, 1.0 - t);
    };
    auto right = [&](double v) -> ComplexMatrix {
        const double s = std::max(std::pow(v, g1), std::numeric_limits<double>::min());
        return (g1 * std::pow(v, g1 - 1.0)) * f(1.0 - s, s);
    };
    QuadResult a = integrate(left, 0.0, std::pow(0.5, 1.0 / g0), half);
    QuadResult b = integrate(right, 0.0, std::pow(0.5, 1.0 / g1), half);
    return {a.value + b.value, a.error + b.error, a.intervals + b.intervals};
}

}  // namespace hornmx
