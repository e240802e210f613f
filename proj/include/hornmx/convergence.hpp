#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"

namespace hornmx {

enum class RegionVerdict { inside, outside, unknown };

inline std::string_view verdict_name(RegionVerdict v) {
    switch (v) {
        case RegionVerdict::inside: return "inside";
        case RegionVerdict::outside: return "outside";
        case RegionVerdict::unknown: return "unknown";
    }
    return "unknown";
}

inline constexpr double region_margin = 1e-9;

namespace detail {

// |lim_u f(mu, nu)| from the factor weights. `along_m` selects f (m-step) or g (n-step).
// Linear forms vanishing on the ray contribute |eps|^e; nearby directions decide the limit.
inline double homogenized_limit(const HornSpec& spec, double m, double n, bool along_m) {
    int degree = -1;
    int zero_order = 0;
    double log_value = along_m ? -std::log(m) : -std::log(n);
    for (const auto& f : spec.factors) {
        int a = along_m ? f.weight_m : f.weight_n;
        if (a == 0) continue;
        int s = f.inverted ? -1 : 1;
        degree += a * s;
        double form = std::abs(f.weight_m * m + f.weight_n * n);
        if (form <= 1e-14 * (std::abs(m) + std::abs(n)))
            zero_order += a * s;
        else
            log_value += a * s * std::log(form);
    }
    if (degree > 0)
        throw OrderMismatch(spec.name + ": homogenized ratio has positive degree " + std::to_string(degree));
    if (degree < 0 || zero_order > 0) return 0.0;
    if (zero_order < 0) return std::numeric_limits<double>::infinity();
    return std::exp(log_value);
}

}  // namespace detail

struct RhoSigma {
    double rho;    // NaN when m == 0
    double sigma;  // NaN when n == 0
};

inline RhoSigma ratio_limit_rho_sigma(const HornSpec& spec, double m, double n) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (!(m >= 0 && n >= 0) || (m == 0 && n == 0)) throw DomainError("ratio_limit_rho_sigma: need (m,n) != (0,0)");
    RhoSigma out{nan, nan};
    if (m > 0) {
        double lim = detail::homogenized_limit(spec, m, n, true);
        out.rho = lim == 0.0 ? inf : 1.0 / lim;  // 1/inf = 0
    }
    if (n > 0) {
        double lim = detail::homogenized_limit(spec, m, n, false);
        out.sigma = lim == 0.0 ? inf : 1.0 / lim;
    }
    return out;
}

namespace detail {

inline RegionVerdict classify(double slack) {
    if (slack < -region_margin) return RegionVerdict::inside;
    if (slack > region_margin) return RegionVerdict::outside;
    return RegionVerdict::unknown;
}

// Largest value of min(r - rho, s - sigma) over directions, plus the axis constraints.
inline double parametric_slack(const HornSpec& spec, double r, double s, int samples) {
    using std::numbers::pi;
    auto h = [&](double theta) {
        RhoSigma rs = ratio_limit_rho_sigma(spec, std::cos(theta), std::sin(theta));
        return std::min(r - rs.rho, s - rs.sigma);
    };
    std::vector<double> th(static_cast<size_t>(samples)), hv(static_cast<size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        th[size_t(k)] = (k + 0.5) * (pi / 2) / samples;
        hv[size_t(k)] = h(th[size_t(k)]);
    }
    double best = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < samples; ++k) {
        best = std::max(best, hv[size_t(k)]);
        bool local_max = (k == 0 || hv[size_t(k)] >= hv[size_t(k - 1)]) &&
                         (k == samples - 1 || hv[size_t(k)] >= hv[size_t(k + 1)]);
        if (!local_max || !std::isfinite(hv[size_t(k)])) continue;
        double lo = k == 0 ? 1e-12 : th[size_t(k - 1)];
        double hi = k == samples - 1 ? pi / 2 - 1e-12 : th[size_t(k + 1)];
        const double g = (std::sqrt(5.0) - 1) / 2;
        double c = hi - g * (hi - lo), d = lo + g * (hi - lo);
        double fc = h(c), fd = h(d);
        for (int it = 0; it < 80; ++it) {
            if (fc > fd) {
                hi = d;
                d = c;
                fd = fc;
                c = hi - g * (hi - lo);
                fc = h(c);
            } else {
                lo = c;
                c = d;
                fc = fd;
                d = lo + g * (hi - lo);
                fd = h(d);
            }
        }
        best = std::max({best, fc, fd});
    }
    RhoSigma axis_m = ratio_limit_rho_sigma(spec, 1.0, 0.0);
    RhoSigma axis_n = ratio_limit_rho_sigma(spec, 0.0, 1.0);
    best = std::max({best, r - axis_m.rho, s - axis_n.sigma});
    return best;
}

// Signed slack of a closed-form inequality (negative inside).
inline double closed_form_slack(const std::string& id, double r, double s) {
    if (id == "r+s<1") return (r + s - 1.0) / 2.0;
    if (id == "r<1 and s<1") return std::max(r - 1.0, s - 1.0);
    if (id == "r<1") return r - 1.0;
    if (id == "s<1") return s - 1.0;
    if (id == "r<1/4") return r - 0.25;
    if (id == "2sqrt(r)+s<1") return (2.0 * std::sqrt(r) + s - 1.0) / 3.0;
    if (id == "entire") return -std::numeric_limits<double>::infinity();
    throw DomainError("unknown closed-form region " + id);
}

}  // namespace detail

inline RegionVerdict parametric_region_contains(const HornSpec& spec, double r, double s, int samples = 64) {
    return detail::classify(detail::parametric_slack(spec, r, s, samples));
}

/// Region membership for (|x|, |y|) = (r, s). Literature closed forms are
/// cross-checked against the parametric construction; disagreement gives unknown.
inline RegionVerdict region_contains(const HornSpec& spec, double r, double s, int samples = 64) {
    if (samples < 16) throw DomainError("region_contains: samples must be >= 16");
    if (spec.region.kind == RegionKind::parametric_horn) return parametric_region_contains(spec, r, s, samples);
    RegionVerdict v = detail::classify(detail::closed_form_slack(spec.region.closed_form_id, r, s));
    if (spec.region.source == RegionSource::paper || v == RegionVerdict::unknown) return v;
    RegionVerdict p = parametric_region_contains(spec, r, s, samples);
    return p == v ? v : RegionVerdict::unknown;
}

/// Radius along the ray (cos phi, sin phi) where the region ends, capped at `cap`.
inline double region_radius(const HornSpec& spec, double phi, double cap = 1.0) {
    double c = std::cos(phi), s = std::sin(phi);
    auto inside = [&](double t) { return region_contains(spec, t * c, t * s) == RegionVerdict::inside; };
    if (inside(cap)) return cap;
    double lo = 0.0, hi = cap;
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        (inside(mid) ? lo : hi) = mid;
    }
    return lo;
}

/// log of the diagonal sums of the norm-majorised scalar series at (r, s).
/// norms[p] is the 2-norm of parameter p.
inline std::vector<double> majorant_log_diagonals(const HornSpec& spec, const std::map<ParamId, double>& norms,
                                                  double r, double s, int max_diagonal) {
    auto log_abs_poch = [](double p, long k) {
        // log |(p)_k| = log|Gamma(p+k)| - log|Gamma(p)|
        double z = p + double(k);
        if (z <= 0 && z == std::floor(z)) z += 1e-7;
        return std::lgamma(z) - std::lgamma(p);
    };
    std::vector<double> out;
    for (int d = 0; d < max_diagonal; ++d) {
        double mx = -std::numeric_limits<double>::infinity();
        std::vector<double> terms;
        for (int m = 0; m <= d; ++m) {
            int n = d - m;
            double l = -std::lgamma(m + 1.0) - std::lgamma(n + 1.0);
            l += m == 0 ? 0.0 : m * std::log(r);
            l += n == 0 ? 0.0 : n * std::log(s);
            for (const auto& f : spec.factors) {
                double v = log_abs_poch(norms.at(f.param), f.index(m, n));
                l += f.inverted ? -v : v;
            }
            terms.push_back(l);
            mx = std::max(mx, l);
        }
        double acc = 0.0;
        for (double t : terms) acc += std::exp(t - mx);
        out.push_back(mx + std::log(acc));
    }
    return out;
}

/// True if the last `window` diagonals are strictly decreasing.
inline bool diagonals_eventually_decrease(const std::vector<double>& logs, int window = 20) {
    if (int(logs.size()) < window + 1) return false;
    for (size_t i = logs.size() - size_t(window); i < logs.size(); ++i)
        if (!(logs[i] < logs[i - 1])) return false;
    return true;
}

inline bool diagonals_eventually_increase(const std::vector<double>& logs, int window = 20) {
    if (int(logs.size()) < window + 1) return false;
    for (size_t i = logs.size() - size_t(window); i < logs.size(); ++i)
        if (!(logs[i] > logs[i - 1])) return false;
    return true;
}

}  // namespace hornmx
