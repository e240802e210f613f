#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fnmatch.h>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "bilateral.hpp"
#include "formula.hpp"
#include "identities.hpp"
#include "integrals.hpp"
#include "series.hpp"

namespace hornmx {

enum class Verdict { pass, fail, undefined, unknown };

inline std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::undefined: return "undefined";
        case Verdict::unknown: return "unknown";
    }
    return "unknown";
}

/// Parameter families. hypothesis: parameters commute exactly when the identity's
/// stated pairs (closed transitively) say so; all other pairs are generic.
enum class Family { scalar, diagonal, triangular, hypothesis };

inline std::string_view family_name(Family f) {
    switch (f) {
        case Family::scalar: return "scalar";
        case Family::diagonal: return "diagonal";
        case Family::triangular: return "triangular";
        case Family::hypothesis: return "hypothesis";
    }
    return "scalar";
}

struct Record {
    std::string id;
    std::string anchor;
    IdentityKind kind = IdentityKind::pde;
    Family family = Family::scalar;
    Verdict verdict = Verdict::unknown;
    double residual = 0.0;
    double scale = 1.0;
    double tol = 1e-8;
    std::uint64_t seed = 0;
    std::string params_digest;
    std::optional<int> r;
    std::optional<double> t;
    std::vector<double> eps;
    Complex x = 0.0, y = 0.0;
    std::string note;
};

struct VerifyOptions {
    double tol = 1e-8;
    double integral_tol = 1e-6;
    int summation_terms = 40;
    std::vector<double> epsilons{1e-1, 1e-2, 1e-3};
    EvalOptions eval{400, 1e-14, 3, RegionPolicy::ignore, 0};
    QuadOptions quad{};
};

// ---------------------------------------------------------------- hashing, draws

inline std::uint64_t fnv1a(const void* data, size_t n, std::uint64_t h = 1469598103934665603ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 1469598103934665603ull) {
    return fnv1a(s.data(), s.size(), h);
}

inline std::string params_digest(const ParamSet& params) {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& [id, m] : params) {
        int tag = int(id);
        h = fnv1a(&tag, sizeof tag, h);
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            for (Eigen::Index i = 0; i < m.rows(); ++i) {
                double re = m(i, j).real(), im = m(i, j).imag();
                h = fnv1a(&re, sizeof re, h);
                h = fnv1a(&im, sizeof im, h);
            }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

/// 53-bit uniform on [lo, hi) from a 64-bit engine; fixed across standard libraries.
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * double(rng() >> 11) * 0x1.0p-53;
}

namespace detail {

inline ComplexMatrix random_conditioned(std::mt19937_64& rng, double max_cond = 10.0) {
    while (true) {
        ComplexMatrix s = identity(2);
        for (Eigen::Index i = 0; i < 2; ++i)
            for (Eigen::Index j = 0; j < 2; ++j) s(i, j) += uniform(rng, -0.8, 0.8);
        double c = operator_two_norm(s) / min_singular_value(s);
        if (c <= max_cond) return s;
    }
}

inline std::map<ParamId, int> commute_classes(const std::vector<ParamId>& ids, const CommutePairs& pairs) {
    std::map<ParamId, ParamId> parent;
    for (ParamId p : ids) parent[p] = p;
    std::function<ParamId(ParamId)> find = [&](ParamId p) { return parent[p] == p ? p : parent[p] = find(parent[p]); };
    for (auto [a, b] : pairs)
        if (parent.count(a) && parent.count(b)) parent[find(a)] = find(b);
    std::map<ParamId, int> label;
    std::map<ParamId, int> out;
    for (ParamId p : ids) {
        ParamId root = find(p);
        if (!label.count(root)) label[root] = int(label.size());
        out[p] = label[root];
    }
    return out;
}

}  // namespace detail

using RangeFn = std::function<std::pair<double, double>(ParamId)>;

/// Random parameters for `ids` in the given family; eigenvalues drawn from range(p).
inline ParamSet draw_params(const std::vector<ParamId>& ids, Family family, const CommutePairs& pairs,
                            std::mt19937_64& rng, const RangeFn& range = {}) {
    auto bounds = [&](ParamId p) { return range ? range(p) : std::pair{0.2, 1.5}; };
    ParamSet out;
    switch (family) {
        case Family::scalar:
            for (ParamId p : ids) {
                auto [lo, hi] = bounds(p);
                out[p] = scalar_matrix(uniform(rng, lo, hi));
            }
            break;
        case Family::diagonal:
            for (ParamId p : ids) {
                auto [lo, hi] = bounds(p);
                double a = uniform(rng, lo, hi), b = uniform(rng, lo, hi);
                out[p] = diag({a, b});
            }
            break;
        case Family::triangular: {
            // p1 I + (p2 - p1) N with the idempotent N = [[0, tau], [0, 1]] shared by all
            const double tau = uniform(rng, 0.3, 1.0);
            ComplexMatrix nil(2, 2);
            nil << 0.0, tau, 0.0, 1.0;
            for (ParamId p : ids) {
                auto [lo, hi] = bounds(p);
                double a = uniform(rng, lo, hi), b = uniform(rng, lo, hi);
                out[p] = a * identity(2) + (b - a) * nil;
            }
            break;
        }
        case Family::hypothesis: {
            auto cls = detail::commute_classes(ids, pairs);
            std::map<int, std::pair<ComplexMatrix, ComplexMatrix>> sim;
            for (ParamId p : ids) {
                int c = cls[p];
                if (!sim.count(c)) {
                    ComplexMatrix s = detail::random_conditioned(rng);
                    sim[c] = {s, s.inverse()};
                }
                auto [lo, hi] = bounds(p);
                double a = uniform(rng, lo, hi), b = uniform(rng, lo, hi);
                out[p] = sim[c].first * diag({a, b}) * sim[c].second;
            }
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------- formula evaluation

struct ArityMismatch : Error {
    using Error::Error;
};

struct NotConverged : Error {
    using Error::Error;
};

namespace detail {

inline ComplexMatrix shifted(const ParamSet& params, ParamId p, int shift) {
    auto it = params.find(p);
    if (it == params.end()) throw DomainError("parameter " + std::string(param_name(p)) + " not available");
    return it->second + double(shift) * identity(it->second.rows());
}

inline ParamSet callee_params(const HornSpec& spec, const SeriesCall& call, const ParamSet& params, int v) {
    if (call.args.size() != spec.params.size())
        throw ArityMismatch("arity: " + call.function + " takes " + std::to_string(spec.params.size()) +
                            " parameters, " + std::to_string(call.args.size()) + " given");
    ParamSet out;
    for (size_t i = 0; i < call.args.size(); ++i)
        out[spec.params[i]] = shifted(params, call.args[i].param, call.args[i].shift.at(v));
    return out;
}

inline ComplexMatrix series_value(const SeriesCall& call, const ParamSet& params, int v, Complex x, Complex y,
                                  double t, const EvalOptions& opts, const TermWeights& w = {}) {
    const HornSpec& spec = get_spec(call.function);
    ParamSet p = callee_params(spec, call, params, v);
    SeriesResult res = sum_series(spec, p, call.first.value(x, y, t), call.second.value(x, y, t), opts, w);
    if (!res.converged) throw NotConverged(call.function + " series did not converge");
    return res.value;
}

inline ComplexMatrix poch_value(const Atom& a, const ParamSet& params, int v) {
    ComplexMatrix base = shifted(params, a.param, 0);
    if (a.one_minus) base = identity(base.rows()) - base;
    const int k = a.index.at(v);
    ComplexMatrix pk = pochhammer(base, k);
    if (!a.inverted) return pk;
    check_factor(pk, k, default_singular_tol);
    return solve_left(pk, identity(pk.rows()));
}

inline Complex var_value(char var, Complex x, Complex y) { return var == 'x' ? x : y; }

/// Value of one non-series atom at shift order (or summation index) v.
inline ComplexMatrix atom_value(const Atom& a, const ParamSet& params, int v, Complex x, Complex y, double t,
                                Eigen::Index dim) {
    switch (a.kind) {
        case AtomKind::sign: return ((v % 2) ? -1.0 : 1.0) * identity(dim);
        case AtomKind::poch: return poch_value(a, params, v);
        case AtomKind::power: return matrix_power(var_value(a.var, x, y), shifted(params, a.param, a.offset.at(v)));
        case AtomKind::one_minus_t_power: return matrix_power(1.0 - t, -shifted(params, a.param, 0));
        case AtomKind::series: break;
    }
    throw DomainError("series atom in constant position");
}

inline ComplexMatrix product(const std::vector<Atom>& atoms, const ParamSet& params, int v, Complex x, Complex y,
                             double t, const EvalOptions& opts, Eigen::Index dim) {
    ComplexMatrix acc = identity(dim);
    for (const auto& a : atoms) {
        if (a.kind == AtomKind::series)
            acc = acc * series_value(a.call, params, v, x, y, t, opts);
        else if (a.kind == AtomKind::sign) {
            if (v % 2) acc = -acc;
        } else
            acc = acc * atom_value(a, params, v, x, y, t, dim);
    }
    return acc;
}

inline Eigen::Index dim_of(const ParamSet& params) { return params.begin()->second.rows(); }

inline double rising(double a, int k) {
    double p = 1.0;
    for (int j = 0; j < k; ++j) p *= a + j;
    return p;
}

}  // namespace detail

/// Left side of a differential formula: the operator applied termwise to
/// [power] series [power]; exact per term.
inline ComplexMatrix differential_lhs(const Expression& e, const ParamSet& params, int r, Complex x, Complex y,
                                      const EvalOptions& opts) {
    if (!e.op) throw DomainError("differential formula without an operator");
    const Eigen::Index dim = detail::dim_of(params);
    const Operator op = *e.op;
    size_t s = e.atoms.size();
    for (size_t i = 0; i < e.atoms.size(); ++i)
        if (e.atoms[i].kind == AtomKind::series) {
            if (s != e.atoms.size()) throw DomainError("more than one series on the left");
            s = i;
        }
    if (s == e.atoms.size()) throw DomainError("no series on the left");
    const SeriesCall& call = e.atoms[s].call;
    const int w1 = op.var == 'x' ? call.first.px : call.first.py;
    const int w2 = op.var == 'x' ? call.second.px : call.second.py;
    auto expo = [=](long m, long n) { return double(w1 * m + w2 * n); };
    const Complex z = detail::var_value(op.var, x, y);

    std::optional<size_t> driver;
    for (size_t i = 0; i < e.atoms.size(); ++i)
        if (e.atoms[i].kind == AtomKind::power && e.atoms[i].var == op.var) {
            if (driver) throw DomainError("two powers of the operator variable");
            driver = i;
        }

    TermWeights w;
    ComplexMatrix pre = identity(dim), post = identity(dim);
    ComplexMatrix drive_power;
    if (driver) {
        const Atom& pa = e.atoms[*driver];
        const ComplexMatrix P = detail::shifted(params, pa.param, 0);
        const int c = pa.offset.at(r);
        const ComplexMatrix I = identity(dim);
        std::function<ComplexMatrix(long, long)> weight;
        if (op.euler) {
            weight = [=](long m, long n) {
                ComplexMatrix acc = I;
                for (int j = 0; j < r; ++j) acc = acc * (P + (c + expo(m, n) + j) * I);
                return acc;
            };
            drive_power = matrix_power(z, P + double(c + r) * I);
        } else {
            weight = [=](long m, long n) {
                ComplexMatrix acc = I;
                for (int j = 0; j < r; ++j) acc = acc * (P + (c + expo(m, n) - j) * I);
                return acc;
            };
            drive_power = matrix_power(z, P + double(c - r) * I);
        }
        if (*driver < s) w.left = weight;
        else w.right = weight;
    } else {
        if (op.euler)
            w.scalar = [=](long m, long n) { return detail::rising(expo(m, n), r); };
        else
            w.scalar = [=](long m, long n) { return falling_factorial(expo(m, n), r); };
    }
    for (size_t i = 0; i < e.atoms.size(); ++i) {
        if (i == s) continue;
        ComplexMatrix v = (driver && i == *driver) ? drive_power
                                                   : detail::atom_value(e.atoms[i], params, r, x, y, 0.0, dim);
        if (i < s) pre = pre * v;
        else post = post * v;
    }
    ComplexMatrix mid = detail::series_value(call, params, r, x, y, 0.0, opts, w);
    if (!driver) mid *= op.euler ? std::pow(z, r) : std::pow(z, -r);
    return pre * mid * post;
}

// ---------------------------------------------------------------- point selection

namespace detail {

inline void collect_calls(const Expression& e, std::vector<const SeriesCall*>& out) {
    for (const auto& a : e.atoms)
        if (a.kind == AtomKind::series) out.push_back(&a.call);
}

/// Every series argument, at twice its magnitude, lies inside the callee's region.
inline bool admissible(const std::vector<const SeriesCall*>& calls, Complex x, Complex y, double t) {
    for (const SeriesCall* c : calls) {
        const HornSpec* spec;
        try {
            spec = &get_spec(c->function);
        } catch (const UnknownFunction&) {
            continue;
        }
        double u = 2.0 * std::abs(c->first.value(x, y, t)), v = 2.0 * std::abs(c->second.value(x, y, t));
        if (region_contains(*spec, u, v) != RegionVerdict::inside) return false;
    }
    return true;
}

inline const std::vector<std::pair<double, double>>& candidate_points() {
    // x != y throughout so that an x/y mix-up cannot cancel
    static const std::vector<std::pair<double, double>> pts{
        {0.1, 0.07},  {0.07, 0.1},  {0.05, 0.03}, {0.03, 0.05},  {0.3, 0.2},    {0.2, 0.3},
        {0.3, 0.02},  {0.02, 0.3},  {0.2, 0.02},  {0.02, 0.2},   {0.1, 0.02},   {0.02, 0.1},
        {0.02, 0.015}, {0.005, 0.1}, {0.002, 0.05}};
    return pts;
}

inline std::optional<std::pair<double, double>> choose_point(const std::vector<const SeriesCall*>& calls,
                                                             const std::vector<double>& ts,
                                                             const std::vector<std::pair<double, double>>& pts) {
    for (auto [px, py] : pts) {
        bool ok = true;
        for (double t : ts) ok = ok && admissible(calls, px, py, t);
        if (ok) return std::pair{px, py};
    }
    return std::nullopt;
}

}  // namespace detail

// ---------------------------------------------------------------- individual checks

namespace detail {

inline void finish(Record& rec, double residual, double scale) {
    rec.residual = residual;
    rec.scale = scale;
    if (!std::isfinite(residual) || !std::isfinite(scale)) {
        rec.verdict = Verdict::fail;
        if (rec.note.empty()) rec.note = "non-finite residual";
        return;
    }
    rec.verdict = residual <= rec.tol * scale ? Verdict::pass : Verdict::fail;
}

// Shared handling of the error taxonomy: singular shifts and unmet hypotheses are
// undefined, everything else is a failure of the identity as encoded.
template <class F>
void guarded(Record& rec, F&& body) {
    try {
        body();
    } catch (const SingularShift& e) {
        rec.verdict = Verdict::undefined;
        rec.note = e.what();
    } catch (const HypothesisViolation& e) {
        rec.verdict = Verdict::undefined;
        rec.note = e.what();
    } catch (const ArityMismatch& e) {
        rec.verdict = Verdict::fail;
        rec.note = e.what();
    } catch (const Error& e) {
        rec.verdict = Verdict::fail;
        rec.note = e.what();
    }
}

inline std::vector<Monomial> flatten(const std::vector<BilateralTerm>& terms) {
    std::vector<Monomial> out;
    for (const auto& t : terms) out.insert(out.end(), t.monomials.begin(), t.monomials.end());
    return out;
}

inline ComplexMatrix word(const std::vector<ParamId>& w, const ParamSet& params, Eigen::Index dim) {
    ComplexMatrix acc = identity(dim);
    for (ParamId p : w) acc = acc * params.at(p);
    return acc;
}

inline bool params_commute(const ParamSet& params, const CommutePairs& pairs) {
    for (auto [a, b] : pairs) {
        auto ia = params.find(a), ib = params.find(b);
        if (ia == params.end() || ib == params.end()) continue;
        const ComplexMatrix& ma = ia->second;
        const ComplexMatrix& mb = ib->second;
        double scale = std::max(1.0, operator_two_norm(ma) * operator_two_norm(mb));
        if (operator_two_norm(ma * mb - mb * ma) > 1e-10 * scale) return false;
    }
    return true;
}

}  // namespace detail

struct PdeResidual {
    double residual = 0.0;  // || sum of terms ||
    double scale = 0.0;     // max || term ||
};

/// Residual of one encoded equation at (x, y); normalised residual = residual / scale.
inline PdeResidual pde_residual(const PdeEntry& entry, const ParamSet& params, Complex x, Complex y,
                                const EvalOptions& opts = VerifyOptions{}.eval) {
    const HornSpec& spec = get_spec(entry.function);
    auto violations = validate_parameters(spec, params, opts.max_diagonal, false);
    for (const auto& v : violations)
        if (v.kind == "singular_shift") throw SingularShift(v.message, 0);
        else throw DomainError(v.message);
    if (!detail::params_commute(params, parse_conditions(entry.conditions)))
        throw HypothesisViolation(entry.id + ": stated commutation conditions do not hold");
    auto terms = parse_bilateral(entry.equation);
    const Eigen::Index dim = detail::dim_of(params);
    std::map<Deriv, ComplexMatrix> cache;
    auto derivative = [&](Deriv d) -> const ComplexMatrix& {
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
        auto [p, q] = deriv_orders(d);
        SeriesResult res = derivative_series(spec, params, x, y, p, q, opts);
        if (!res.converged) throw NotConverged(entry.function + " derivative series did not converge");
        return cache.emplace(d, res.value).first->second;
    };
    PdeResidual out;
    ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
    for (const auto& t : terms) {
        ComplexMatrix tv = ComplexMatrix::Zero(dim, dim);
        for (const auto& m : t.monomials) {
            Complex c = m.coef * std::pow(x, m.px) * std::pow(y, m.py);
            tv += c * (detail::word(m.left, params, dim) * derivative(m.deriv) * detail::word(m.right, params, dim));
        }
        out.scale = std::max(out.scale, tv.norm());
        total += tv;
    }
    out.residual = total.norm();
    return out;
}

/// Both equations of a function's system (the printed rows, without side-by-side variants).
inline std::pair<double, double> pde_system_residuals(const std::string& function, const ParamSet& params, Complex x,
                                                      Complex y, const EvalOptions& opts = VerifyOptions{}.eval) {
    std::vector<double> res;
    for (const auto& e : pde_table())
        if (e.function == function && e.note.empty()) {
            PdeResidual r = pde_residual(e, params, x, y, opts);
            res.push_back(r.scale > 0 ? r.residual / r.scale : r.residual);
        }
    if (res.size() != 2) throw UnknownFunction("no bilateral system for " + function);
    return {res[0], res[1]};
}

inline Record check_pde(const PdeEntry& entry, const ParamSet& params, Complex x, Complex y,
                        const VerifyOptions& vo = {}) {
    Record rec;
    rec.id = entry.id;
    rec.anchor = entry.anchor;
    rec.kind = IdentityKind::pde;
    rec.tol = vo.tol;
    rec.x = x;
    rec.y = y;
    rec.params_digest = params_digest(params);
    rec.note = entry.note;
    detail::guarded(rec, [&] {
        PdeResidual r = pde_residual(entry, params, x, y, vo.eval);
        detail::finish(rec, r.residual, r.scale);
    });
    return rec;
}

inline Record check_differential_formula(const FormulaEntry& entry, const ParamSet& params, Complex x, Complex y,
                                         int r, const VerifyOptions& vo = {}) {
    Record rec;
    rec.id = entry.id;
    rec.anchor = entry.anchor;
    rec.kind = IdentityKind::diff_formula;
    rec.tol = vo.tol;
    rec.r = r;
    rec.x = x;
    rec.y = y;
    rec.params_digest = params_digest(params);
    rec.note = entry.note;
    if (r == 0) {
        rec.note = "empty shift";
        detail::finish(rec, 0.0, 1.0);
        return rec;
    }
    detail::guarded(rec, [&] {
        Expression lhs = parse_formula(entry.lhs), rhs = parse_formula(entry.rhs);
        ComplexMatrix l = differential_lhs(lhs, params, r, x, y, vo.eval);
        ComplexMatrix rv = detail::product(rhs.atoms, params, r, x, y, 0.0, vo.eval, detail::dim_of(params));
        detail::finish(rec, (l - rv).norm(), std::max({l.norm(), rv.norm(), 1e-300}));
    });
    return rec;
}

inline Record check_summation_formula(const FormulaEntry& entry, const ParamSet& params, Complex x, Complex y,
                                      double t, const VerifyOptions& vo = {}) {
    Record rec;
    rec.id = entry.id;
    rec.anchor = entry.anchor;
    rec.kind = IdentityKind::summation;
    rec.tol = vo.tol;
    rec.t = t;
    rec.x = x;
    rec.y = y;
    rec.params_digest = params_digest(params);
    rec.note = entry.note;
    detail::guarded(rec, [&] {
        if (!(std::abs(t) < 1.0)) throw DomainError("t: need |t| < 1");
        Expression lhs = parse_formula(entry.lhs), rhs = parse_formula(entry.rhs);
        const Eigen::Index dim = detail::dim_of(params);
        ComplexMatrix l = detail::product(lhs.atoms, params, 0, x, y, t, vo.eval, dim);
        ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
        const int N = t == 0.0 ? 0 : vo.summation_terms;
        double tn = 1.0, fact = 1.0, c_est = 0.0;
        for (int n = 0; n <= N; ++n) {
            if (n > 0) {
                tn *= t;
                fact *= n;
            }
            ComplexMatrix term = detail::product(rhs.atoms, params, n, x, y, 0.0, vo.eval, dim) * (tn / fact);
            sum += term;
            if (n >= N - 4 && n > 0) c_est = std::max(c_est, term.norm() / std::pow(std::abs(t), n));
        }
        const double tail = N > 0 ? c_est * std::pow(std::abs(t), N + 1) / (1.0 - std::abs(t)) : 0.0;
        double scale = std::max({l.norm(), sum.norm(), 1e-300}) + tail / vo.tol;
        if (rec.note.empty() && tail > 0) {
            std::ostringstream os;
            os << "tail " << tail;
            rec.note = os.str();
        }
        detail::finish(rec, (l - sum).norm(), scale);
    });
    return rec;
}

/// d_k = ||parent(eps_k) - child|| / ||child||; pass when d_k strictly decreases and the
/// least-squares order in eps is at least 0.9. residual is the last absolute distance.
inline Record check_confluence_limit(const ConfluenceEntry& entry, const ParamSet& params, Complex x, Complex y,
                                     const std::vector<double>& epsilons, const VerifyOptions& vo = {}) {
    Record rec;
    rec.id = entry.id;
    rec.anchor = entry.anchor;
    rec.kind = IdentityKind::confluence;
    rec.tol = vo.tol;
    rec.eps = epsilons;
    rec.x = x;
    rec.y = y;
    rec.params_digest = params_digest(params);
    detail::guarded(rec, [&] {
        const HornSpec& child = get_spec(entry.function);
        const HornSpec& parent = get_spec(entry.parent);
        if (entry.parent_args.size() != parent.params.size()) throw ArityMismatch("arity: " + entry.parent);
        SeriesResult cr = sum_series(child, params, x, y, vo.eval);
        if (!cr.converged) throw NotConverged(entry.function + " series did not converge");
        const double cn = std::max(cr.value.norm(), 1e-300);
        std::vector<double> d;
        for (double eps : epsilons) {
            ParamSet pp;
            for (size_t i = 0; i < parent.params.size(); ++i) {
                const std::string& a = entry.parent_args[i];
                if (a == "eps") {
                    pp[parent.params[i]] = (1.0 / eps) * identity(detail::dim_of(params));
                } else {
                    auto id = parse_param(a);
                    if (!id) throw DomainError("bad parent argument " + a);
                    pp[parent.params[i]] = detail::shifted(params, *id, 0);
                }
            }
            SeriesResult pr =
                sum_series(parent, pp, x * std::pow(eps, entry.kx), y * std::pow(eps, entry.ky), vo.eval);
            if (!pr.converged) throw NotConverged(entry.parent + " series did not converge");
            d.push_back((pr.value - cr.value).norm() / cn);
        }
        rec.residual = d.empty() ? 0.0 : d.back() * cn;
        rec.scale = cn;
        if (epsilons.size() < 2) {
            rec.verdict = Verdict::unknown;
            rec.note = "no trend";
            return;
        }
        bool decreasing = true;
        for (size_t k = 1; k < d.size(); ++k) decreasing = decreasing && d[k] < d[k - 1];
        double mx = 0, my = 0;
        for (size_t k = 0; k < d.size(); ++k) {
            mx += std::log(epsilons[k]);
            my += std::log(std::max(d[k], 1e-300));
        }
        mx /= double(d.size());
        my /= double(d.size());
        double sxy = 0, sxx = 0;
        for (size_t k = 0; k < d.size(); ++k) {
            double dx = std::log(epsilons[k]) - mx;
            sxy += dx * (std::log(std::max(d[k], 1e-300)) - my);
            sxx += dx * dx;
        }
        const double order = sxx > 0 ? sxy / sxx : 0.0;
        std::ostringstream os;
        os.precision(4);
        os << "order " << order;
        rec.note = os.str();
        rec.verdict = (decreasing && order >= 0.9) ? Verdict::pass : Verdict::fail;
    });
    return rec;
}

inline Record check_integral(const IntegralEntry& entry, const ParamSet& params, double x, double y,
                             const VerifyOptions& vo = {}) {
    Record rec;
    rec.id = entry.id;
    rec.anchor = entry.anchor;
    rec.kind = IdentityKind::integral;
    rec.tol = vo.integral_tol;
    rec.x = x;
    rec.y = y;
    rec.params_digest = params_digest(params);
    detail::guarded(rec, [&] {
        SeriesResult s = sum_series(get_spec(entry.function), params, x, y, vo.eval);
        if (!s.converged) throw NotConverged(entry.function + " series did not converge");
        QuadResult q = evaluate_integral_representation(entry.function, params, x, y, vo.quad);
        detail::finish(rec, (q.value - s.value).norm(), std::max(s.value.norm(), 1e-300));
    });
    return rec;
}

// ---------------------------------------------------------------- suite

struct Task {
    IdentityKind kind;
    size_t index;
    Family family;
    int r = 0;
    double t = 0.0;
};

inline std::string_view task_id(const Task& task) {
    switch (task.kind) {
        case IdentityKind::pde: return pde_table()[task.index].id;
        case IdentityKind::diff_formula: return diff_table()[task.index].id;
        case IdentityKind::summation: return summation_table()[task.index].id;
        case IdentityKind::confluence: return confluence_table()[task.index].id;
        case IdentityKind::integral: return integral_table()[task.index].id;
    }
    return {};
}

inline bool matches_filter(std::string_view id, const std::string& filter) {
    if (filter.empty()) return true;
    return fnmatch(filter.c_str(), std::string(id).c_str(), 0) == 0;
}

inline std::vector<Task> build_tasks(const std::string& filter) {
    std::vector<Task> tasks;
    auto want = [&](std::string_view id) { return matches_filter(id, filter); };
    const Family basic[] = {Family::scalar, Family::diagonal, Family::triangular};
    const Family all[] = {Family::scalar, Family::diagonal, Family::triangular, Family::hypothesis};
    for (size_t i = 0; i < pde_table().size(); ++i)
        if (want(pde_table()[i].id))
            for (Family f : basic) tasks.push_back({IdentityKind::pde, i, f});
    for (size_t i = 0; i < diff_table().size(); ++i)
        if (want(diff_table()[i].id))
            for (Family f : all)
                for (int r : {1, 2}) tasks.push_back({IdentityKind::diff_formula, i, f, r});
    for (size_t i = 0; i < summation_table().size(); ++i)
        if (want(summation_table()[i].id))
            for (Family f : all)
                for (double t : {0.2, -0.2, 0.0}) tasks.push_back({IdentityKind::summation, i, f, 0, t});
    for (size_t i = 0; i < confluence_table().size(); ++i)
        if (want(confluence_table()[i].id))
            for (Family f : basic) tasks.push_back({IdentityKind::confluence, i, f});
    for (size_t i = 0; i < integral_table().size(); ++i)
        if (want(integral_table()[i].id))
            for (Family f : {Family::scalar, Family::diagonal}) tasks.push_back({IdentityKind::integral, i, f});
    return tasks;
}

inline std::uint64_t task_seed(std::uint64_t seed, const Task& task) {
    std::ostringstream os;
    os << seed << '|' << task_id(task) << '|' << family_name(task.family) << '|' << task.r << '|' << task.t;
    return fnv1a(os.str());
}

namespace detail {

// identity conditions plus the function's standing pairs
inline CommutePairs hypotheses(const HornSpec& spec, const std::string& conditions) {
    CommutePairs out = parse_conditions(conditions);
    out.insert(out.end(), spec.commute_pairs.begin(), spec.commute_pairs.end());
    return out;
}

inline Record unknown_point(Record rec, std::string_view id, std::string_view anchor, IdentityKind kind) {
    rec.id = std::string(id);
    rec.anchor = std::string(anchor);
    rec.kind = kind;
    rec.verdict = Verdict::unknown;
    rec.note = "no admissible evaluation point";
    return rec;
}

inline Record run_task(const Task& task, std::uint64_t seed, const VerifyOptions& vo) {
    const std::uint64_t ts = task_seed(seed, task);
    std::mt19937_64 rng(ts);
    Record rec;
    switch (task.kind) {
        case IdentityKind::pde: {
            const PdeEntry& e = pde_table()[task.index];
            const HornSpec& spec = get_spec(e.function);
            ParamSet p = draw_params(spec.params, task.family, hypotheses(spec, e.conditions), rng);
            SeriesCall self{e.function, {}, ArgExpr{1, 0, 0}, ArgExpr{0, 1, 0}};
            auto pt = choose_point({&self}, {0.0}, {{0.05, 0.05}, {0.02, 0.02}});
            if (!pt) {
                rec = unknown_point(rec, e.id, e.anchor, task.kind);
                break;
            }
            rec = check_pde(e, p, pt->first, pt->second, vo);
            break;
        }
        case IdentityKind::diff_formula: {
            const FormulaEntry& e = diff_table()[task.index];
            const HornSpec& spec = get_spec(e.function);
            ParamSet p = draw_params(spec.params, task.family, hypotheses(spec, e.conditions), rng);
            std::vector<const SeriesCall*> calls;
            Expression lhs = parse_formula(e.lhs), rhs = parse_formula(e.rhs);
            collect_calls(lhs, calls);
            collect_calls(rhs, calls);
            auto pt = choose_point(calls, {0.0}, candidate_points());
            if (!pt) {
                rec = unknown_point(rec, e.id, e.anchor, task.kind);
                rec.r = task.r;
                break;
            }
            rec = check_differential_formula(e, p, pt->first, pt->second, task.r, vo);
            break;
        }
        case IdentityKind::summation: {
            const FormulaEntry& e = summation_table()[task.index];
            const HornSpec& spec = get_spec(e.function);
            ParamSet p = draw_params(spec.params, task.family, hypotheses(spec, e.conditions), rng);
            std::vector<const SeriesCall*> calls;
            Expression lhs = parse_formula(e.lhs), rhs = parse_formula(e.rhs);
            collect_calls(lhs, calls);
            collect_calls(rhs, calls);
            auto pt = choose_point(calls, {0.2, -0.2, 0.0}, {{0.05, 0.03}, {0.03, 0.05}, {0.02, 0.015}});
            if (!pt) {
                rec = unknown_point(rec, e.id, e.anchor, task.kind);
                rec.t = task.t;
                break;
            }
            rec = check_summation_formula(e, p, pt->first, pt->second, task.t, vo);
            break;
        }
        case IdentityKind::confluence: {
            const ConfluenceEntry& e = confluence_table()[task.index];
            const HornSpec& spec = get_spec(e.function);
            ParamSet p = draw_params(spec.params, task.family, {}, rng);
            SeriesCall self{e.function, {}, ArgExpr{1, 0, 0}, ArgExpr{0, 1, 0}};
            auto pt = choose_point({&self}, {0.0}, {{0.1, 0.1}, {0.05, 0.05}});
            if (!pt) {
                rec = unknown_point(rec, e.id, e.anchor, task.kind);
                break;
            }
            rec = check_confluence_limit(e, p, pt->first, pt->second, vo.epsilons, vo);
            break;
        }
        case IdentityKind::integral: {
            const IntegralEntry& e = integral_table()[task.index];
            const HornSpec& spec = get_spec(e.function);
            auto range = [](ParamId id) {
                if (id == ParamId::B || id == ParamId::Bp) return std::pair{0.15, 0.45};
                return std::pair{0.2, 1.5};
            };
            ParamSet p = draw_params(spec.params, task.family, {}, rng, range);
            // C = A + delta, C' = B + delta' keep C - A and C' - B positive stable
            if (e.function == "H3" || e.function == "H4") {
                auto delta = [&](Family f) {
                    ParamSet d = draw_params({ParamId::C}, f, {}, rng, [](ParamId) { return std::pair{0.3, 1.0}; });
                    return d.at(ParamId::C);
                };
                p[ParamId::C] = p.at(ParamId::A) + delta(task.family);
                if (e.function == "H4") p[ParamId::Cp] = p.at(ParamId::B) + delta(task.family);
            }
            const double x = e.y_axis ? 0.0 : 0.05, y = 0.05;
            rec = check_integral(e, p, x, y, vo);
            break;
        }
    }
    rec.family = task.family;
    rec.seed = ts;
    return rec;
}

inline unsigned thread_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HORNMX_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) n = std::min<unsigned>(n, unsigned(v));
    }
    return n;
}

}  // namespace detail

/// All encoded identities whose id matches the glob `filter` ("" = everything), over
/// seeded draws. Records come back in task order regardless of thread count.
inline std::vector<Record> run_suite(const std::string& filter, std::uint64_t seed, const VerifyOptions& vo = {},
                                     unsigned threads = 0) {
    const std::vector<Task> tasks = build_tasks(filter);
    std::vector<Record> out(tasks.size());
    if (threads == 0) threads = detail::thread_count();
    threads = std::max(1u, std::min<unsigned>(threads, unsigned(std::max<size_t>(tasks.size(), 1))));
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < tasks.size();) out[i] = detail::run_task(tasks[i], seed, vo);
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return out;
}

// ---------------------------------------------------------------- report and allowlist

inline nlohmann::ordered_json record_json(const Record& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["anchor"] = r.anchor;
    j["verdict"] = verdict_name(r.verdict);
    j["residual"] = r.residual;
    j["scale"] = r.scale;
    j["seed"] = r.seed;
    j["params_digest"] = r.params_digest;
    j["kind"] = kind_name(r.kind);
    j["family"] = family_name(r.family);
    j["tol"] = r.tol;
    j["point"] = {{r.x.real(), r.x.imag()}, {r.y.real(), r.y.imag()}};
    if (r.r) j["r"] = *r.r;
    if (r.t) j["t"] = *r.t;
    if (!r.eps.empty()) j["eps"] = r.eps;
    j["note"] = r.note;
    return j;
}

inline std::string report_jsonl(const std::vector<Record>& records) {
    std::string s;
    for (const auto& r : records) {
        s += record_json(r).dump();
        s += '\n';
    }
    return s;
}

struct AllowEntry {
    std::string id;
    std::optional<int> r;
    std::optional<std::string> family;
    std::string reason;
    std::string anchor;
};

struct Allowlist {
    int version = 0;
    std::vector<AllowEntry> entries;

    const AllowEntry* find(const Record& rec) const {
        for (const auto& e : entries) {
            if (e.id != rec.id) continue;
            if (e.r && (!rec.r || *rec.r != *e.r)) continue;
            if (e.family && *e.family != family_name(rec.family)) continue;
            return &e;
        }
        return nullptr;
    }
};

inline Allowlist parse_allowlist(const nlohmann::json& j) {
    Allowlist a;
    if (!j.contains("version") || !j["version"].is_number_integer()) throw DomainError("allowlist: field 'version' missing");
    a.version = j["version"].get<int>();
    if (!j.contains("entries") || !j["entries"].is_array()) throw DomainError("allowlist: field 'entries' missing");
    for (const auto& e : j["entries"]) {
        AllowEntry ae;
        if (!e.contains("id") || !e["id"].is_string()) throw DomainError("allowlist: field 'id' missing");
        ae.id = e["id"].get<std::string>();
        if (e.contains("r")) ae.r = e["r"].get<int>();
        if (e.contains("family")) ae.family = e["family"].get<std::string>();
        if (!e.contains("reason") || !e["reason"].is_string())
            throw DomainError("allowlist: field 'reason' missing for " + ae.id);
        ae.reason = e["reason"].get<std::string>();
        if (!e.contains("anchor") || !e["anchor"].is_string())
            throw DomainError("allowlist: field 'anchor' missing for " + ae.id);
        ae.anchor = e["anchor"].get<std::string>();
        a.entries.push_back(std::move(ae));
    }
    return a;
}

inline std::string default_allowlist_path() {
#ifdef HORNMX_DATA_DIR
    return std::string(HORNMX_DATA_DIR) + "/allowlist.json";
#else
    return "data/allowlist.json";
#endif
}

inline Allowlist load_allowlist(const std::string& path = default_allowlist_path()) {
    std::ifstream in(path);
    if (!in) throw Error("allowlist: cannot open " + path);
    return parse_allowlist(nlohmann::json::parse(in));
}

/// Fail records not covered by the allowlist.
inline std::vector<const Record*> unexpected_failures(const std::vector<Record>& records, const Allowlist& allow) {
    std::vector<const Record*> out;
    for (const auto& r : records)
        if (r.verdict == Verdict::fail && !allow.find(r)) out.push_back(&r);
    return out;
}

}  // namespace hornmx
