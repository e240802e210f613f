#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <hornmx/series.hpp>

#include "support.hpp"

using namespace hornmx;
using hornmx::testing::rel;
using hornmx::testing::uniform;

namespace {

ParamSet scalar_params(const HornSpec& spec, const std::map<ParamId, double>& p) {
    ParamSet out;
    for (ParamId id : spec.params) out[id] = scalar_matrix(p.at(id));
    return out;
}

double log_gamma_signed(double z, int& sign) {
    int s = 1;
    double v = lgamma_r(z, &s);
    sign = s;
    return v;
}

// Naive double sum with Gamma-ratio coefficients, no recurrences.
Complex naive_sum(const HornSpec& spec, const std::map<ParamId, double>& p, Complex x, Complex y, int n_max) {
    Complex total = 0.0;
    for (int m = 0; m <= n_max; ++m)
        for (int n = 0; n <= n_max; ++n) {
            if ((x == 0.0 && m > 0) || (y == 0.0 && n > 0)) continue;
            double l = -std::lgamma(m + 1.0) - std::lgamma(n + 1.0);
            int sign = 1;
            for (const auto& f : spec.factors) {
                double a = p.at(f.param);
                int s1, s2;
                double v = log_gamma_signed(a + double(f.index(m, n)), s1) - log_gamma_signed(a, s2);
                sign *= s1 * s2;
                l += f.inverted ? -v : v;
            }
            Complex mono = std::pow(x, m) * std::pow(y, n);
            total += double(sign) * std::exp(l) * mono;
        }
    return total;
}

EvalOptions quiet() {
    EvalOptions o;
    o.region_policy = RegionPolicy::ignore;
    return o;
}

}  // namespace

TEST(Evaluate, G1ZeroParametersGivesIdentity) {
    const auto& s = get_spec("G1");
    auto r = evaluate(s, scalar_params(s, {{ParamId::A, 0}, {ParamId::B, 0}, {ParamId::Bp, 0}}), 0.2, 0.1);
    EXPECT_TRUE(r.converged);
    EXPECT_EQ(r.value(0, 0), Complex(1.0));
    ParamSet d{{ParamId::A, ComplexMatrix::Zero(2, 2)}, {ParamId::B, ComplexMatrix::Zero(2, 2)},
               {ParamId::Bp, ComplexMatrix::Zero(2, 2)}};
    EXPECT_EQ(evaluate(s, d, 0.3, 0.2).value, identity(2));
}

TEST(Evaluate, G1OnAxisIsGaussSeries) {
    const auto& s = get_spec("G1");
    auto r = evaluate(s, scalar_params(s, {{ParamId::A, 0.5}, {ParamId::B, 0.3}, {ParamId::Bp, 0.2}}), 0.2, 0.0);
    // 2F1(0.5, 0.2; 0.7; -0.2) by its own Gauss series
    double a = 0.5, b = 0.2, c = 0.7, z = -0.2, term = 1.0, sum = 1.0;
    for (int k = 0; k < 200; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
    }
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value(0, 0).real(), sum, 1e-14);
    EXPECT_EQ(r.value(0, 0).imag(), 0.0);
}

TEST(Evaluate, cH5OnYAxis) {
    const auto& s = get_spec("cH5");
    ComplexMatrix a = diag({0.4, 1.3});
    ParamSet p{{ParamId::A, a}, {ParamId::C, a}};
    ComplexMatrix want = ComplexMatrix::Zero(2, 2);
    double fact = 1.0;
    for (int n = 0; n <= 40; ++n) {
        if (n > 0) fact *= n;
        want += pochhammer(a, -n) * std::pow(0.1, n) / fact;
    }
    auto r = evaluate(s, p, 0.0, 0.1);
    EXPECT_TRUE(r.converged);
    EXPECT_LT(rel(r.value, want), 1e-14);
}

TEST(Evaluate, ScalarOracleAllSpecs) {
    std::mt19937_64 g(2024);
    using std::numbers::pi;
    const double phis[3] = {pi / 6, pi / 4, pi / 3};
    const Complex phase_x[3] = {1.0, -1.0, std::polar(1.0, 0.7)};
    const Complex phase_y[3] = {1.0, std::polar(1.0, 2.1), -1.0};
    for (const auto& s : catalog()) {
        for (int draw = 0; draw < 4; ++draw) {
            std::map<ParamId, double> p;
            for (ParamId id : s.params) p[id] = uniform(g, 0.2, 1.5);
            ParamSet ps = scalar_params(s, p);
            for (int k = 0; k < 3; ++k) {
                double rad = 0.5 * region_radius(s, phis[k]);
                Complex x = rad * std::cos(phis[k]) * phase_x[k], y = rad * std::sin(phis[k]) * phase_y[k];
                auto r = evaluate(s, ps, x, y);
                Complex want = naive_sum(s, p, x, y, 140);
                EXPECT_TRUE(r.converged) << s.name;
                EXPECT_LT(std::abs(r.value(0, 0) - want) / std::abs(want), 1e-10) << s.name << " point " << k;
            }
        }
    }
}

TEST(Evaluate, DiagonalFactorization) {
    std::mt19937_64 g(7);
    for (const auto& s : catalog()) {
        std::map<ParamId, double> p1, p2;
        ParamSet pd;
        for (ParamId id : s.params) {
            p1[id] = uniform(g, 0.2, 1.5);
            p2[id] = uniform(g, 0.2, 1.5);
            pd[id] = diag({p1[id], p2[id]});
        }
        double rad = 0.5 * region_radius(s, std::numbers::pi / 4);
        Complex x = rad * 0.7071, y = -rad * 0.7071;
        auto rd = evaluate(s, pd, x, y);
        auto r1 = evaluate(s, scalar_params(s, p1), x, y);
        auto r2 = evaluate(s, scalar_params(s, p2), x, y);
        EXPECT_LT(std::abs(rd.value(0, 0) - r1.value(0, 0)) / std::abs(r1.value(0, 0)), 1e-10) << s.name;
        EXPECT_LT(std::abs(rd.value(1, 1) - r2.value(0, 0)) / std::abs(r2.value(0, 0)), 1e-10) << s.name;
        EXPECT_EQ(std::abs(rd.value(0, 1)), 0.0);
    }
}

TEST(Evaluate, MonotoneRefinement) {
    std::mt19937_64 g(8);
    for (const auto& s : catalog()) {
        ParamSet p;
        for (ParamId id : s.params) p[id] = hornmx::testing::random_shifted(g, 2, 0.3, 1.2);
        double rad = 0.5 * region_radius(s, 0.9);
        Complex x = rad * std::cos(0.9), y = rad * std::sin(0.9);
        EvalOptions o;
        auto a = evaluate(s, p, x, y, o);
        if (!a.converged) continue;
        o.max_diagonal = 200;
        auto b = evaluate(s, p, x, y, o);
        EXPECT_LE((a.value - b.value).norm(), o.rel_tol * a.value.norm() * 10) << s.name;
        EXPECT_LE(a.tail_estimate, o.rel_tol * a.value.norm());
    }
}

TEST(Evaluate, DriftCheckStaysSmall) {
    std::mt19937_64 g(9);
    for (const auto& s : catalog()) {
        ParamSet p;
        for (ParamId id : s.params) p[id] = hornmx::testing::random_shifted(g, 2, 0.3, 1.2);
        EvalOptions o;
        o.rel_tol = 1e-300;  // force all diagonals so the drift check runs
        o.max_diagonal = 66;
        auto r = evaluate(s, p, 0.05, 0.05, o);
        EXPECT_LT(r.max_drift, 1e-8) << s.name;
    }
}

TEST(Evaluate, RegionPolicyEnforce) {
    const auto& s = get_spec("G1");
    ParamSet p = scalar_params(s, {{ParamId::A, 0.5}, {ParamId::B, 0.3}, {ParamId::Bp, 0.2}});
    EvalOptions o;
    o.region_policy = RegionPolicy::enforce;
    EXPECT_THROW(evaluate(s, p, 0.6, 0.6, o), RegionError);
    EXPECT_NO_THROW(evaluate(s, p, 0.3, 0.3, o));
    o.region_policy = RegionPolicy::warn;
    EXPECT_EQ(evaluate(s, p, 0.6, 0.6, o).region_verdict, RegionVerdict::outside);
}

TEST(Evaluate, NotConvergedWhenBudgetTooSmall) {
    const auto& s = get_spec("G1");
    ParamSet p = scalar_params(s, {{ParamId::A, 0.5}, {ParamId::B, 0.3}, {ParamId::Bp, 0.2}});
    EvalOptions o;
    o.max_diagonal = 5;
    auto r = evaluate(s, p, 0.4, 0.4, o);
    EXPECT_FALSE(r.converged);
    EXPECT_EQ(r.diagonals_used, 5);
}

TEST(Evaluate, SingularShiftPropagates) {
    const auto& s = get_spec("H1");
    ParamSet p{{ParamId::A, scalar_matrix(0.5)}, {ParamId::B, scalar_matrix(0.5)}, {ParamId::C, scalar_matrix(0.5)},
               {ParamId::Cp, scalar_matrix(-2.0)}};
    EXPECT_THROW(evaluate(s, p, 0.1, 0.1, quiet()), SingularShift);
}

TEST(Derivative, ZeroOrderEqualsValue) {
    std::mt19937_64 g(10);
    for (const auto& s : catalog()) {
        ParamSet p;
        for (ParamId id : s.params) p[id] = hornmx::testing::random_shifted(g, 2, 0.3, 1.2);
        EXPECT_EQ(evaluate_derivative(s, p, 0.1, 0.05, 0, 0), evaluate(s, p, 0.1, 0.05).value) << s.name;
    }
}

TEST(Derivative, FiniteDifferenceG1) {
    const auto& s = get_spec("G1");
    ParamSet p = scalar_params(s, {{ParamId::A, 0.5}, {ParamId::B, 0.3}, {ParamId::Bp, 0.2}});
    double h = 1e-5;
    Complex fd = (evaluate(s, p, 0.1 + h, 0.1).value(0, 0) - evaluate(s, p, 0.1 - h, 0.1).value(0, 0)) / (2 * h);
    Complex d = evaluate_derivative(s, p, 0.1, 0.1, 1, 0)(0, 0);
    EXPECT_LT(std::abs(d - fd) / std::abs(d), 1e-6);
}

TEST(Derivative, AtOriginPicksSingleCoefficient) {
    std::mt19937_64 g(11);
    for (const auto& s : catalog()) {
        ParamSet p;
        for (ParamId id : s.params) p[id] = hornmx::testing::random_shifted(g, 2, 0.3, 1.2);
        ComplexMatrix d = evaluate_derivative(s, p, 0.0, 0.0, 1, 1);
        EXPECT_LT(rel(d, coefficient(s, p, 1, 1)), 1e-13) << s.name;
        ComplexMatrix d2 = evaluate_derivative(s, p, 0.0, 0.0, 2, 0);
        EXPECT_LT(rel(d2, 2.0 * coefficient(s, p, 2, 0)), 1e-13) << s.name;
    }
}

TEST(Derivative, NestedFiniteDifferences) {
    std::mt19937_64 g(12);
    const double x = 0.06, y = 0.04, h = 1e-4;
    for (const auto& s : catalog()) {
        ParamSet p;
        for (ParamId id : s.params) p[id] = hornmx::testing::random_shifted(g, 2, 0.3, 1.2);
        auto f = [&](double a, double b) { return evaluate(s, p, a, b).value; };
        ComplexMatrix fx = (f(x + h, y) - f(x - h, y)) / (2 * h);
        ComplexMatrix fy = (f(x, y + h) - f(x, y - h)) / (2 * h);
        ComplexMatrix fxx = (f(x + h, y) - 2.0 * f(x, y) + f(x - h, y)) / (h * h);
        ComplexMatrix fyy = (f(x, y + h) - 2.0 * f(x, y) + f(x, y - h)) / (h * h);
        ComplexMatrix fxy = (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) + f(x - h, y - h)) / (4 * h * h);
        EXPECT_LT(rel(evaluate_derivative(s, p, x, y, 1, 0), fx), 1e-5) << s.name;
        EXPECT_LT(rel(evaluate_derivative(s, p, x, y, 0, 1), fy), 1e-5) << s.name;
        EXPECT_LT(rel(evaluate_derivative(s, p, x, y, 2, 0), fxx), 1e-5) << s.name;
        EXPECT_LT(rel(evaluate_derivative(s, p, x, y, 0, 2), fyy), 1e-5) << s.name;
        EXPECT_LT(rel(evaluate_derivative(s, p, x, y, 1, 1), fxy), 1e-5) << s.name;
    }
}

TEST(Derivative, OrderLimit) {
    const auto& s = get_spec("G1");
    ParamSet p = scalar_params(s, {{ParamId::A, 0.5}, {ParamId::B, 0.3}, {ParamId::Bp, 0.2}});
    EXPECT_THROW(evaluate_derivative(s, p, 0.1, 0.1, 3, 2), DomainError);
}
