#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <hornmx/convergence.hpp>

#include "support.hpp"

using namespace hornmx;

TEST(RatioLimit, G1) {
    const auto& s = get_spec("G1");
    auto rs = ratio_limit_rho_sigma(s, 1, 1);
    EXPECT_NEAR(rs.rho, 0.5, 1e-12);
    EXPECT_NEAR(rs.sigma, 0.5, 1e-12);
    // rho = m/(m+n) for G1, so rho(1,0) = 1
    auto axis = ratio_limit_rho_sigma(s, 1, 0);
    EXPECT_NEAR(axis.rho, 1.0, 1e-12);
    EXPECT_TRUE(std::isnan(axis.sigma));
    auto rs2 = ratio_limit_rho_sigma(s, 3, 1);
    EXPECT_NEAR(rs2.rho, 0.75, 1e-12);
    EXPECT_NEAR(rs2.sigma, 0.25, 1e-12);
}

TEST(RatioLimit, G2IsOneEverywhere) {
    const auto& s = get_spec("G2");
    for (double t : {0.1, 0.7, 1.0, 3.0}) {
        auto rs = ratio_limit_rho_sigma(s, 1.0, t);
        EXPECT_NEAR(rs.rho, 1.0, 1e-12);
        EXPECT_NEAR(rs.sigma, 1.0, 1e-12);
    }
}

TEST(RatioLimit, MatchesNumericalRatioOfMajorant) {
    // f(mu, nu) at large u from Gamma-ratio coefficients with unit parameter norms
    for (const auto& s : catalog()) {
        for (double t : {0.3, 1.7}) {
            double m = 1.0, n = t, u = 1e6;
            auto coef = [&](double mm, double nn) {
                double l = -std::lgamma(mm + 1) - std::lgamma(nn + 1);
                for (const auto& f : s.factors) {
                    double k = f.weight_m * mm + f.weight_n * nn;
                    double v = std::lgamma(0.5 + k) - std::lgamma(0.5);
                    l += f.inverted ? -v : v;
                }
                return l;
            };
            double mu = std::round(m * u), nu = std::round(n * u);
            double f = std::exp(coef(mu + 1, nu) - coef(mu, nu));
            double g = std::exp(coef(mu, nu + 1) - coef(mu, nu));
            auto rs = ratio_limit_rho_sigma(s, mu, nu);
            if (std::isfinite(rs.rho)) EXPECT_NEAR(1.0 / f / rs.rho, 1.0, 1e-4) << s.name;
            else EXPECT_LT(f, 1e-4) << s.name;
            if (std::isfinite(rs.sigma)) EXPECT_NEAR(1.0 / g / rs.sigma, 1.0, 1e-4) << s.name;
            else EXPECT_LT(g, 1e-4) << s.name;
        }
    }
}

TEST(RatioLimit, HomogeneousOfDegreeZero) {
    for (const auto& s : catalog())
        for (double t : {0.2, 1.0, 2.5}) {
            auto base = ratio_limit_rho_sigma(s, 1.0, t);
            for (double lam : {2.0, 10.0}) {
                auto sc = ratio_limit_rho_sigma(s, lam, lam * t);
                for (auto [b, c] : {std::pair{base.rho, sc.rho}, std::pair{base.sigma, sc.sigma}}) {
                    if (std::isfinite(b) && b > 0) EXPECT_NEAR(c / b, 1.0, 1e-12) << s.name;
                    else EXPECT_EQ(b, c) << s.name;
                }
            }
        }
}

TEST(RatioLimit, PositiveDegreeIsRejected) {
    HornSpec bad = get_spec("G1");
    bad.factors.push_back({ParamId::A, 1, 0, false});
    EXPECT_THROW(ratio_limit_rho_sigma(bad, 1, 1), OrderMismatch);
}

TEST(Region, G1Examples) {
    const auto& s = get_spec("G1");
    EXPECT_EQ(region_contains(s, 0.3, 0.3), RegionVerdict::inside);
    EXPECT_EQ(region_contains(s, 0.6, 0.6), RegionVerdict::outside);
    EXPECT_EQ(region_contains(s, 0.5, 0.5), RegionVerdict::unknown);
}

TEST(Region, G2Examples) {
    const auto& s = get_spec("G2");
    EXPECT_EQ(region_contains(s, 0.9, 0.9), RegionVerdict::inside);
    EXPECT_EQ(region_contains(s, 0.99, 0.5), RegionVerdict::inside);
    EXPECT_EQ(region_contains(s, 1.01, 0.5), RegionVerdict::outside);
}

TEST(Region, G1ParametricMatchesClosedFormOnGrid) {
    const auto& s = get_spec("G1");
    for (int i = 0; i < 50; ++i)
        for (int j = 0; j < 50; ++j) {
            double r = 1.2 * i / 49.0, sv = 1.2 * j / 49.0;
            if (std::abs(r + sv - 1.0) < 1e-6) continue;
            RegionVerdict want = r + sv < 1.0 ? RegionVerdict::inside : RegionVerdict::outside;
            EXPECT_EQ(parametric_region_contains(s, r, sv), want) << r << "," << sv;
        }
}

TEST(Region, LiteratureFormsAgreeWithParametric) {
    for (const auto& s : catalog()) {
        if (s.region.kind != RegionKind::closed_form) continue;
        for (int i = 0; i < 25; ++i)
            for (int j = 0; j < 25; ++j) {
                double r = 1.3 * (i + 0.37) / 25.0, sv = 1.3 * (j + 0.61) / 25.0;
                double slack = detail::closed_form_slack(s.region.closed_form_id, r, sv);
                if (std::abs(slack) < 1e-6) continue;
                RegionVerdict want = slack < 0 ? RegionVerdict::inside : RegionVerdict::outside;
                EXPECT_EQ(parametric_region_contains(s, r, sv), want) << s.name << " " << r << "," << sv;
            }
    }
}

TEST(Region, RadiusIsCappedAndPositive) {
    for (const auto& s : catalog()) {
        double rad = region_radius(s, std::numbers::pi / 4);
        EXPECT_GT(rad, 0.05) << s.name;
        EXPECT_LE(rad, 1.0);
    }
    EXPECT_NEAR(region_radius(get_spec("G1"), std::numbers::pi / 4), std::sqrt(0.5), 1e-8);
}

TEST(Region, EmpiricalDecayConsistency) {
    for (const auto& s : catalog()) {
        std::map<ParamId, double> norms;
        for (ParamId p : s.params) norms[p] = 0.55;
        const double phi = std::numbers::pi / 4;
        double rad = region_radius(s, phi, 4.0);
        double ri = 0.5 * rad * std::cos(phi), si = 0.5 * rad * std::sin(phi);
        ASSERT_EQ(region_contains(s, ri, si), RegionVerdict::inside) << s.name;
        auto in = majorant_log_diagonals(s, norms, ri, si, 120);
        EXPECT_TRUE(diagonals_eventually_decrease(in)) << s.name;
        if (rad >= 4.0) continue;  // unbounded along this ray
        double ro = 1.3 * rad * std::cos(phi), so = 1.3 * rad * std::sin(phi);
        ASSERT_EQ(region_contains(s, ro, so), RegionVerdict::outside) << s.name;
        auto out = majorant_log_diagonals(s, norms, ro, so, 120);
        EXPECT_TRUE(diagonals_eventually_increase(out)) << s.name;
    }
}

TEST(Region, G1DiagonalDecayCriterion) {
    const auto& s = get_spec("G1");
    std::map<ParamId, double> norms{{ParamId::A, 0.6}, {ParamId::B, 0.4}, {ParamId::Bp, 0.3}};
    EXPECT_TRUE(diagonals_eventually_decrease(majorant_log_diagonals(s, norms, 0.45, 0.45, 120)));
    EXPECT_FALSE(diagonals_eventually_decrease(majorant_log_diagonals(s, norms, 0.7, 0.7, 120)));
}
