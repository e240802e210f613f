#include <gtest/gtest.h>

#include <hornmx/pochhammer.hpp>

#include "support.hpp"

using namespace hornmx;
using hornmx::testing::random_shifted;
using hornmx::testing::rel;

TEST(Pochhammer, ZeroIndexIsIdentity) {
    std::mt19937_64 g(1);
    EXPECT_EQ(pochhammer(random_shifted(g, 3, -2, 2), 0), identity(3));
}

TEST(Pochhammer, DiagonalPositive) {
    ComplexMatrix p = pochhammer(diag({1.0, 2.0}), 3);
    EXPECT_EQ(p, diag({6.0, 24.0}));
}

TEST(Pochhammer, ScalarNegativeIndex) {
    // Gamma(1)/Gamma(3)
    EXPECT_NEAR(pochhammer(scalar_matrix(3.0), -2)(0, 0).real(), 0.5, 1e-15);
}

TEST(Pochhammer, SingularShift) {
    try {
        pochhammer(diag({2.0, 0.5}), -3);
        FAIL() << "expected SingularShift";
    } catch (const SingularShift& e) {
        EXPECT_EQ(e.shift, 2);
    }
}

TEST(Pochhammer, ShiftComposition) {
    std::mt19937_64 g(21);
    for (int trial = 0; trial < 20; ++trial) {
        ComplexMatrix a = random_shifted(g, 3, -1.5, 1.5);
        ComplexMatrix id = identity(3);
        for (long m : {0L, 1L, 3L})
            for (long n : {0L, 2L, 5L}) {
                ComplexMatrix lhs = pochhammer(a, m) * pochhammer(a + double(m) * id, n);
                EXPECT_LT(rel(lhs, pochhammer(a, m + n)), 1e-12);
            }
    }
}

TEST(Pochhammer, SignInverseConsistency) {
    std::mt19937_64 g(22);
    for (int trial = 0; trial < 20; ++trial) {
        ComplexMatrix a = random_shifted(g, 3, -1.5, 0.7);
        for (long k = 1; k <= 6; ++k) {
            ComplexMatrix prod = pochhammer(a, -k) * pochhammer(identity(3) - a, k);
            ComplexMatrix want = (k % 2 ? -1.0 : 1.0) * identity(3);
            EXPECT_LT(operator_two_norm(prod - want), 1e-10);
        }
    }
}

TEST(Pochhammer, GammaRatio) {
    std::mt19937_64 g(23);
    for (int trial = 0; trial < 20; ++trial) {
        ComplexMatrix a = random_shifted(g, 3, 0.3, 2.0);
        for (long n = 1; n <= 6; ++n) {
            ComplexMatrix ratio = matrix_rgamma(a) * matrix_gamma(a + double(n) * identity(3));
            EXPECT_LT(rel(ratio, pochhammer(a, n)), 1e-9);
        }
    }
}

TEST(Pochhammer, DiagonalFactorization) {
    ComplexMatrix a = diag({0.3, -0.6, 1.7});
    for (long k = -4; k <= 4; ++k) {
        ComplexMatrix p = pochhammer(a, k);
        for (int i = 0; i < 3; ++i) {
            double want = std::tgamma(a(i, i).real() + double(k)) / std::tgamma(a(i, i).real());
            EXPECT_NEAR(p(i, i).real() / want, 1.0, 1e-12);
            for (int j = 0; j < 3; ++j)
                if (i != j) EXPECT_EQ(std::abs(p(i, j)), 0.0);
        }
    }
}

TEST(PochhammerTable, MatchesDirectBothDirections) {
    std::mt19937_64 g(24);
    ComplexMatrix a = random_shifted(g, 2, -0.8, 0.8);
    for (bool inv : {false, true}) {
        PochhammerTable t(a, inv);
        for (long k = -12; k <= 12; ++k) {
            ComplexMatrix want = pochhammer(a, k);
            if (inv) want = want.inverse().eval();
            EXPECT_LT(rel(t.value(k), want), 1e-11) << "k=" << k << " inv=" << inv;
        }
    }
}

TEST(PochhammerTable, NormalisationAvoidsOverflow) {
    PochhammerTable t(scalar_matrix(0.7), false);
    // (0.7)_300 overflows a double but the normalised entry stays finite.
    Complex v = t.normalized(300)(0, 0);
    double logv = std::log(std::abs(v)) + t.log_scale(300);
    EXPECT_NEAR(logv, std::lgamma(300.7) - std::lgamma(0.7), 1e-9);
}
