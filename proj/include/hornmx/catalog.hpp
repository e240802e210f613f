#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pochhammer.hpp"

namespace hornmx {

enum class ParamId { A, Ap, B, Bp, C, Cp, Cpp };

inline constexpr std::array<ParamId, 7> all_param_ids = {ParamId::A,  ParamId::Ap, ParamId::B,  ParamId::Bp,
                                                         ParamId::C,  ParamId::Cp, ParamId::Cpp};

inline std::string_view param_name(ParamId p) {
    switch (p) {
        case ParamId::A: return "A";
        case ParamId::Ap: return "A'";
        case ParamId::B: return "B";
        case ParamId::Bp: return "B'";
        case ParamId::C: return "C";
        case ParamId::Cp: return "C'";
        case ParamId::Cpp: return "C''";
    }
    return "?";
}

inline std::optional<ParamId> parse_param(std::string_view s) {
    for (ParamId p : all_param_ids)
        if (param_name(p) == s) return p;
    return std::nullopt;
}

using ParamSet = std::map<ParamId, ComplexMatrix>;

struct FactorSpec {
    ParamId param;
    int weight_m;
    int weight_n;
    bool inverted;

    long index(long m, long n) const { return long(weight_m) * m + long(weight_n) * n; }
};

enum class RegionKind { closed_form, parametric_horn };
enum class RegionSource { paper, scalar_literature };

struct RegionDescriptor {
    RegionKind kind;
    std::string closed_form_id;  // empty for parametric
    RegionSource source;
};

inline std::string_view source_name(RegionSource s) {
    return s == RegionSource::paper ? "paper" : "scalar_literature";
}

struct HornSpec {
    std::string name;
    std::vector<ParamId> params;  // printed parameter order
    std::vector<FactorSpec> factors;
    std::vector<std::pair<ParamId, ParamId>> commute_pairs;
    std::vector<ParamId> invert_params;
    RegionDescriptor region;
    bool confluent = false;

    bool has_param(ParamId p) const { return std::find(params.begin(), params.end(), p) != params.end(); }
};

namespace detail {

inline HornSpec make_spec(std::string name, std::vector<ParamId> params, std::vector<FactorSpec> factors,
                          std::vector<std::pair<ParamId, ParamId>> commute, RegionDescriptor region,
                          bool confluent) {
    HornSpec s;
    s.name = std::move(name);
    s.params = std::move(params);
    s.factors = std::move(factors);
    s.commute_pairs = std::move(commute);
    s.region = std::move(region);
    s.confluent = confluent;
    for (const auto& f : s.factors)
        if (f.inverted && std::find(s.invert_params.begin(), s.invert_params.end(), f.param) == s.invert_params.end())
            s.invert_params.push_back(f.param);
    return s;
}

inline std::vector<HornSpec> build_catalog() {
    using P = ParamId;
    const RegionDescriptor parametric{RegionKind::parametric_horn, "", RegionSource::scalar_literature};
    auto lit = [](std::string id) { return RegionDescriptor{RegionKind::closed_form, std::move(id), RegionSource::scalar_literature}; };
    const bool conf = true;
    std::vector<HornSpec> v;
    v.push_back(make_spec("G1", {P::A, P::B, P::Bp},
                          {{P::A, 1, 1, false}, {P::B, -1, 1, false}, {P::Bp, 1, -1, false}},
                          {{P::B, P::Bp}}, {RegionKind::closed_form, "r+s<1", RegionSource::paper}, false));
    v.push_back(make_spec("G2", {P::A, P::Ap, P::B, P::Bp},
                          {{P::A, 1, 0, false}, {P::Ap, 0, 1, false}, {P::B, -1, 1, false}, {P::Bp, 1, -1, false}},
                          {{P::A, P::Ap}, {P::B, P::Bp}}, lit("r<1 and s<1"), false));
    v.push_back(make_spec("G3", {P::A, P::Ap}, {{P::A, -1, 2, false}, {P::Ap, 2, -1, false}}, {}, parametric, false));
    v.push_back(make_spec("H1", {P::A, P::B, P::C, P::Cp},
                          {{P::A, 1, -1, false}, {P::B, 1, 1, false}, {P::C, 0, 1, false}, {P::Cp, 1, 0, true}},
                          {{P::A, P::B}, {P::C, P::Cp}}, parametric, false));
    v.push_back(make_spec("H2", {P::A, P::B, P::C, P::Cp, P::Cpp},
                          {{P::A, 1, -1, false},
                           {P::B, 1, 0, false},
                           {P::C, 0, 1, false},
                           {P::Cp, 0, 1, false},
                           {P::Cpp, 1, 0, true}},
                          {{P::A, P::B}, {P::C, P::Cp}, {P::C, P::Cpp}, {P::Cp, P::Cpp}}, parametric, false));
    v.push_back(make_spec("H3", {P::A, P::B, P::C}, {{P::A, 2, 1, false}, {P::B, 0, 1, false}, {P::C, 1, 1, true}},
                          {{P::B, P::C}}, parametric, false));
    v.push_back(make_spec("H4", {P::A, P::B, P::C, P::Cp},
                          {{P::A, 2, 1, false}, {P::B, 0, 1, false}, {P::C, 1, 0, true}, {P::Cp, 0, 1, true}},
                          {{P::A, P::B}, {P::C, P::Cp}}, lit("2sqrt(r)+s<1"), false));
    v.push_back(make_spec("H5", {P::A, P::B, P::C}, {{P::A, 2, 1, false}, {P::B, -1, 1, false}, {P::C, 0, 1, true}},
                          {{P::B, P::C}}, parametric, false));
    v.push_back(make_spec("H6", {P::A, P::B, P::C}, {{P::A, 2, -1, false}, {P::B, -1, 1, false}, {P::C, 0, 1, false}},
                          {{P::B, P::C}}, parametric, false));
    v.push_back(make_spec("H7", {P::A, P::B, P::C, P::Cp},
                          {{P::A, 2, -1, false}, {P::B, 0, 1, false}, {P::C, 0, 1, false}, {P::Cp, 1, 0, true}},
                          {{P::A, P::B}, {P::C, P::Cp}}, parametric, false));

    v.push_back(make_spec("Gamma1", {P::A, P::B, P::Bp},
                          {{P::A, 1, 0, false}, {P::B, -1, 1, false}, {P::Bp, 1, -1, false}}, {{P::A, P::B}},
                          lit("r<1"), conf));
    v.push_back(make_spec("Gamma2", {P::B, P::Bp}, {{P::B, -1, 1, false}, {P::Bp, 1, -1, false}}, {}, lit("entire"),
                          conf));
    v.push_back(make_spec("cH1", {P::A, P::B, P::C},
                          {{P::A, 1, -1, false}, {P::B, 1, 1, false}, {P::C, 1, 0, true}}, {{P::B, P::C}}, lit("r<1"),
                          conf));
    v.push_back(make_spec("cH2", {P::A, P::B, P::Bp, P::C},
                          {{P::A, 1, -1, false}, {P::B, 1, 0, false}, {P::Bp, 0, 1, false}, {P::C, 1, 0, true}},
                          {{P::A, P::B}, {P::Bp, P::C}}, lit("r<1"), conf));
    v.push_back(make_spec("cH3", {P::A, P::B, P::C}, {{P::A, 1, -1, false}, {P::B, 1, 0, false}, {P::C, 1, 0, true}},
                          {{P::B, P::C}}, lit("r<1"), conf));
    v.push_back(make_spec("cH4", {P::A, P::Bp, P::C},
                          {{P::A, 1, -1, false}, {P::Bp, 0, 1, false}, {P::C, 1, 0, true}}, {{P::Bp, P::C}},
                          lit("entire"), conf));
    v.push_back(make_spec("cH5", {P::A, P::C}, {{P::A, 1, -1, false}, {P::C, 1, 0, true}}, {}, lit("entire"), conf));
    v.push_back(make_spec("cH6", {P::A, P::C}, {{P::A, 2, 1, false}, {P::C, 1, 1, true}}, {}, lit("r<1/4"), conf));
    v.push_back(make_spec("cH7", {P::A, P::C, P::Cp}, {{P::A, 2, 1, false}, {P::C, 1, 0, true}, {P::Cp, 0, 1, true}},
                          {{P::C, P::Cp}}, lit("r<1/4"), conf));
    v.push_back(make_spec("cH8", {P::A, P::B}, {{P::A, 2, -1, false}, {P::B, -1, 1, false}}, {}, lit("r<1/4"), conf));
    v.push_back(make_spec("cH9", {P::A, P::B, P::C}, {{P::A, 2, -1, false}, {P::B, 0, 1, false}, {P::C, 1, 0, true}},
                          {{P::B, P::C}}, lit("r<1/4"), conf));
    v.push_back(make_spec("cH10", {P::A, P::C}, {{P::A, 2, -1, false}, {P::C, 1, 0, true}}, {}, lit("r<1/4"), conf));
    v.push_back(make_spec("cH11", {P::A, P::B, P::C, P::Cp},
                          {{P::A, 1, -1, false}, {P::B, 0, 1, false}, {P::C, 0, 1, false}, {P::Cp, 1, 0, true}},
                          {{P::A, P::B}, {P::C, P::Cp}}, lit("s<1"), conf));
    return v;
}

}  // namespace detail

inline const std::vector<HornSpec>& catalog() {
    static const std::vector<HornSpec> specs = detail::build_catalog();
    return specs;
}

inline const HornSpec& get_spec(std::string_view name) {
    for (const auto& s : catalog())
        if (s.name == name) return s;
    throw UnknownFunction("unknown function: " + std::string(name));
}

struct Violation {
    std::string kind;  // "missing", "dimension", "singular_shift", "commute"
    std::string message;
};

inline std::vector<Violation> validate_parameters(const HornSpec& spec, const ParamSet& params, long k_max,
                                                  bool check_commute = true, double tol = 1e-12) {
    std::vector<Violation> out;
    Eigen::Index dim = -1;
    for (ParamId p : spec.params) {
        auto it = params.find(p);
        if (it == params.end()) {
            out.push_back({"missing", "parameter " + std::string(param_name(p)) + " missing"});
            continue;
        }
        if (it->second.rows() != it->second.cols())
            out.push_back({"dimension", "parameter " + std::string(param_name(p)) + " is not square"});
        else if (dim < 0)
            dim = it->second.rows();
        else if (it->second.rows() != dim)
            out.push_back({"dimension", "parameter " + std::string(param_name(p)) + " has mismatched dimension"});
    }
    if (!out.empty()) return out;

    // standing hypothesis: C+kI, C'+kI, C''+kI invertible, plus every inverted factor
    std::vector<ParamId> guarded = spec.invert_params;
    for (ParamId p : {ParamId::C, ParamId::Cp, ParamId::Cpp})
        if (spec.has_param(p) && std::find(guarded.begin(), guarded.end(), p) == guarded.end()) guarded.push_back(p);
    for (ParamId p : guarded) {
        if (auto k = shifted_inverse_guard(params.at(p), k_max, tol))
            out.push_back({"singular_shift",
                           std::string(param_name(p)) + "+" + std::to_string(*k) + "I is singular"});
    }
    for (const auto& f : spec.factors) {
        if ((f.weight_m >= 0 && f.weight_n >= 0) || f.inverted) continue;
        const ComplexMatrix& pm = params.at(f.param);
        const ComplexMatrix id = identity(pm.rows());
        for (long j = 1; j <= k_max; ++j)
            if (min_singular_value(double(j) * id - pm) <= tol) {
                out.push_back({"singular_shift", std::to_string(j) + "I-" + std::string(param_name(f.param)) +
                                                     " is singular"});
                break;
            }
    }
    if (check_commute) {
        for (auto [a, b] : spec.commute_pairs) {
            const ComplexMatrix& ma = params.at(a);
            const ComplexMatrix& mb = params.at(b);
            double scale = std::max(1.0, operator_two_norm(ma) * operator_two_norm(mb));
            if (operator_two_norm(ma * mb - mb * ma) > 1e-10 * scale)
                out.push_back({"commute", std::string(param_name(a)) + std::string(param_name(b)) + " != " +
                                              std::string(param_name(b)) + std::string(param_name(a))});
        }
    }
    return out;
}

/// Direct termwise coefficient: product of Pochhammer symbols in printed order,
/// inverted factors as right inverses, divided by m! n!.
inline ComplexMatrix coefficient(const HornSpec& spec, const ParamSet& params, long m, long n,
                                 double tol = default_singular_tol) {
    const Eigen::Index r = params.at(spec.params.front()).rows();
    ComplexMatrix c = identity(r);
    for (const auto& f : spec.factors) {
        long k = f.index(m, n);
        ComplexMatrix pk = pochhammer(params.at(f.param), k, tol);
        if (!f.inverted) {
            c = c * pk;
        } else {
            detail::check_factor(pk, k, tol);
            c = detail::solve_right(c, pk);
        }
    }
    return c / (std::tgamma(double(m) + 1.0) * std::tgamma(double(n) + 1.0));
}

}  // namespace hornmx
