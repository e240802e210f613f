#pragma once

#include <cstdlib>
#include <string>

#include "matrix_core.hpp"

namespace hornmx {

inline constexpr double default_singular_tol = 1e-12;

namespace detail {

// Throws SingularShift(j) when `factor` is numerically singular.
inline void check_factor(const ComplexMatrix& factor, long j, double tol) {
    double smax = operator_two_norm(factor);
    double smin = min_singular_value(factor);
    if (!(smin > tol * std::max(smax, 1.0)))
        throw SingularShift("singular Pochhammer factor at shift " + std::to_string(j), j);
}

inline ComplexMatrix solve_left(const ComplexMatrix& factor, const ComplexMatrix& rhs) {
    if (factor.rows() == 1) return rhs / factor(0, 0);
    return factor.partialPivLu().solve(rhs);
}

// rhs * factor^{-1}
inline ComplexMatrix solve_right(const ComplexMatrix& rhs, const ComplexMatrix& factor) {
    if (factor.rows() == 1) return rhs / factor(0, 0);
    return factor.transpose().partialPivLu().solve(rhs.transpose()).transpose();
}

}  // namespace detail

/// (A)_k for any integer k; (A)_{-n} = (-1)^n [(I-A)_n]^{-1}.
inline ComplexMatrix pochhammer(const ComplexMatrix& a, long k, double tol = default_singular_tol) {
    const auto r = a.rows();
    const ComplexMatrix id = identity(r);
    if (k >= 0) {
        ComplexMatrix p = id;
        for (long j = 0; j < k; ++j) p = p * (a + double(j) * id);
        return p;
    }
    const long n = -k;
    ComplexMatrix prod = id;
    for (long j = 1; j <= n; ++j) {
        ComplexMatrix f = double(j) * id - a;
        detail::check_factor(f, j, tol);
        prod = prod * f;
    }
    ComplexMatrix out = detail::solve_left(prod, id);
    return (n % 2 == 0) ? out : ComplexMatrix(-out);
}

/// Cached (P)_k (or its inverse) for k in a growing window [lo, hi] around 0.
/// Entries are stored normalised by |k|!^{+1} or ^{-1}; see log_scale().
class PochhammerTable {
public:
    PochhammerTable() = default;
    PochhammerTable(ComplexMatrix p, bool inverted, double tol = default_singular_tol)
        : p_(std::move(p)), inverted_(inverted), tol_(tol) {
        const ComplexMatrix id = identity(p_.rows());
        pos_.push_back(id);
        neg_.push_back(id);
    }

    bool inverted() const { return inverted_; }
    Eigen::Index dim() const { return p_.rows(); }

    /// Normalised value N[k]; true value = N[k] * exp(log_scale(k)).
    const ComplexMatrix& normalized(long k) {
        if (k >= 0) {
            while (long(pos_.size()) <= k) extend_pos();
            return pos_[size_t(k)];
        }
        while (long(neg_.size()) <= -k) extend_neg();
        return neg_[size_t(-k)];
    }

    /// +1 if the true value grows like |k|!, -1 if it decays like 1/|k|!, 0 at k=0.
    int factorial_sign(long k) const {
        if (k == 0) return 0;
        bool grows = (k > 0) != inverted_;
        return grows ? 1 : -1;
    }

    double log_scale(long k) const {
        int s = factorial_sign(k);
        return s == 0 ? 0.0 : s * std::lgamma(double(std::labs(k)) + 1.0);
    }

    ComplexMatrix value(long k) { return normalized(k) * std::exp(log_scale(k)); }

private:
    void extend_pos() {
        const long k = long(pos_.size());  // building N[k] from N[k-1]
        const ComplexMatrix id = identity(p_.rows());
        ComplexMatrix step = p_ + double(k - 1) * id;
        if (!inverted_) {
            pos_.push_back(pos_.back() * step / double(k));
        } else {
            detail::check_factor(step, k - 1, tol_);
            pos_.push_back(detail::solve_left(step, pos_.back()) * double(k));
        }
    }

    void extend_neg() {
        const long j = long(neg_.size());  // building N[-j] from N[-(j-1)]
        const ComplexMatrix id = identity(p_.rows());
        ComplexMatrix step = double(j) * id - p_;
        if (!inverted_) {
            detail::check_factor(step, j, tol_);
            neg_.push_back(detail::solve_right(neg_.back(), step) * (-double(j)));
        } else {
            neg_.push_back(step * neg_.back() * (-1.0 / double(j)));
        }
    }

    ComplexMatrix p_;
    bool inverted_ = false;
    double tol_ = default_singular_tol;
    std::vector<ComplexMatrix> pos_, neg_;
};

}  // namespace hornmx
