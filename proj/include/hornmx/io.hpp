#pragma once

#include <string>

#include <json.hpp>

#include "series.hpp"

namespace hornmx {

/// Malformed job or report input; field() names the offending JSON path.
struct InputError : Error {
    InputError(std::string field, const std::string& what) : Error(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

struct Job {
    std::string function;
    ParamSet params;
    Complex x = 0.0, y = 0.0;
    EvalOptions options;
};

inline nlohmann::ordered_json complex_json(Complex z) { return nlohmann::ordered_json::array({z.real(), z.imag()}); }

inline Complex parse_complex(const nlohmann::json& j, const std::string& field) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw InputError(field, "expected a number or [re, im]");
}

/// Row-major array of rows; entries are numbers or [re, im]. A bare number is 1x1.
inline ComplexMatrix parse_matrix(const nlohmann::json& j, const std::string& field) {
    if (j.is_number()) return scalar_matrix(j.get<double>());
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw InputError(field, "expected a row-major matrix");
    const size_t rows = j.size(), cols = j[0].size();
    if (rows != cols) throw InputError(field, "matrix must be square");
    ComplexMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw InputError(field, "ragged matrix rows");
        for (size_t k = 0; k < cols; ++k)
            m(i, k) = parse_complex(j[i][k], field + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
    return m;
}

inline nlohmann::ordered_json matrix_json(const ComplexMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline RegionPolicy parse_policy(const nlohmann::json& j, const std::string& field) {
    if (!j.is_string()) throw InputError(field, "expected enforce, warn or ignore");
    const auto s = j.get<std::string>();
    if (s == "enforce") return RegionPolicy::enforce;
    if (s == "warn") return RegionPolicy::warn;
    if (s == "ignore") return RegionPolicy::ignore;
    throw InputError(field, "expected enforce, warn or ignore");
}

inline Job parse_job(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("job", "expected an object");
    Job job;
    if (!j.contains("function") || !j["function"].is_string()) throw InputError("function", "missing or not a string");
    job.function = j["function"].get<std::string>();
    const HornSpec& spec = get_spec(job.function);

    if (!j.contains("params") || !j["params"].is_object()) throw InputError("params", "missing or not an object");
    for (const auto& [key, value] : j["params"].items()) {
        auto id = parse_param(key);
        if (!id || !spec.has_param(*id)) throw InputError("params." + key, "not a parameter of " + job.function);
        job.params[*id] = parse_matrix(value, "params." + key);
    }
    for (ParamId p : spec.params)
        if (!job.params.count(p)) throw InputError("params." + std::string(param_name(p)), "missing");
    const Eigen::Index dim = job.params.at(spec.params.front()).rows();
    for (const auto& [id, m] : job.params)
        if (m.rows() != dim) throw InputError("params." + std::string(param_name(id)), "dimension mismatch");

    if (!j.contains("point") || !j["point"].is_array() || j["point"].size() != 2)
        throw InputError("point", "expected [x, y]");
    job.x = parse_complex(j["point"][0], "point[0]");
    job.y = parse_complex(j["point"][1], "point[1]");

    if (j.contains("options")) {
        const auto& o = j["options"];
        if (!o.is_object()) throw InputError("options", "expected an object");
        if (o.contains("max_diagonal")) {
            if (!o["max_diagonal"].is_number_integer() || o["max_diagonal"].get<long>() <= 0)
                throw InputError("options.max_diagonal", "expected a positive integer");
            job.options.max_diagonal = o["max_diagonal"].get<int>();
        }
        if (o.contains("rel_tol")) {
            if (!o["rel_tol"].is_number() || !(o["rel_tol"].get<double>() > 0))
                throw InputError("options.rel_tol", "expected a positive number");
            job.options.rel_tol = o["rel_tol"].get<double>();
        }
        if (o.contains("region_policy")) job.options.region_policy = parse_policy(o["region_policy"], "options.region_policy");
    }
    return job;
}

inline nlohmann::ordered_json eval_report(const Job& job, const SeriesResult& res) {
    nlohmann::ordered_json out;
    out["function"] = job.function;
    out["point"] = {complex_json(job.x), complex_json(job.y)};
    out["value"] = matrix_json(res.value);
    out["diagonals_used"] = res.diagonals_used;
    out["tail_estimate"] = res.tail_estimate;
    out["converged"] = res.converged;
    out["region_verdict"] = verdict_name(res.region_verdict);
    return out;
}

/// name -> {params, factors [param, m weight, n weight, inverted], commute_pairs, region, confluent}
inline nlohmann::ordered_json spec_table_json() {
    nlohmann::ordered_json out;
    for (const HornSpec& s : catalog()) {
        nlohmann::ordered_json e;
        e["params"] = nlohmann::ordered_json::array();
        for (ParamId p : s.params) e["params"].push_back(param_name(p));
        e["factors"] = nlohmann::ordered_json::array();
        for (const auto& f : s.factors) e["factors"].push_back({param_name(f.param), f.weight_m, f.weight_n, f.inverted});
        e["commute_pairs"] = nlohmann::ordered_json::array();
        for (auto [a, b] : s.commute_pairs) e["commute_pairs"].push_back({param_name(a), param_name(b)});
        e["region"] = {{"formula", s.region.kind == RegionKind::parametric_horn ? "parametric" : s.region.closed_form_id},
                       {"source", source_name(s.region.source)}};
        e["confluent"] = s.confluent;
        out[s.name] = std::move(e);
    }
    return out;
}

}  // namespace hornmx
