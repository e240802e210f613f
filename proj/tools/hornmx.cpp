#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <hornmx/hornmx.hpp>

namespace {

enum Exit { ok = 0, error = 1, not_converged = 2, unknown_region = 3 };

int fail(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return error;
}

// "-" means stdout
bool write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return bool(std::cout);
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    return bool(out);
}

int cmd_eval(const std::string& input, const std::string& output) {
    nlohmann::json j;
    try {
        std::ifstream in(input);
        if (!in) return fail("input: cannot open " + input);
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        return fail("input: " + std::string(e.what()));
    }
    try {
        hornmx::Job job = hornmx::parse_job(j);
        hornmx::SeriesResult res =
            hornmx::evaluate(hornmx::get_spec(job.function), job.params, job.x, job.y, job.options);
        if (!write_text(output, hornmx::eval_report(job, res).dump() + "\n")) return fail("output: cannot write " + output);
        if (!res.converged) {
            std::cerr << "warning: series did not converge within max_diagonal\n";
            return not_converged;
        }
        return ok;
    } catch (const hornmx::UnknownFunction& e) {
        return fail(std::string("function: ") + e.what());
    } catch (const hornmx::RegionError& e) {
        return fail(std::string("point: ") + e.what());
    } catch (const hornmx::InputError& e) {
        return fail(e.what());
    } catch (const hornmx::SingularShift& e) {
        return fail(std::string("params: ") + e.what());
    } catch (const hornmx::Error& e) {
        return fail(e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail("input: " + std::string(e.what()));
    }
}

int cmd_region(const std::string& function, double r, double s) {
    if (!(r >= 0)) return fail("r: must be >= 0");
    if (!(s >= 0)) return fail("s: must be >= 0");
    try {
        const hornmx::HornSpec& spec = hornmx::get_spec(function);
        hornmx::RegionVerdict v = hornmx::region_contains(spec, r, s);
        std::cout << hornmx::verdict_name(v) << " source=" << hornmx::source_name(spec.region.source) << "\n";
        switch (v) {
            case hornmx::RegionVerdict::inside: return ok;
            case hornmx::RegionVerdict::outside: return not_converged;
            case hornmx::RegionVerdict::unknown: return unknown_region;
        }
        return unknown_region;
    } catch (const hornmx::UnknownFunction& e) {
        return fail(std::string("function: ") + e.what());
    }
}

int cmd_verify(const std::string& filter, std::uint64_t seed, const std::string& output, const std::string& allow_path,
               unsigned threads) {
    hornmx::Allowlist allow;
    try {
        allow = hornmx::load_allowlist(allow_path);
    } catch (const std::exception& e) {
        return fail(std::string("allowlist: ") + e.what());
    }
    std::vector<hornmx::Record> records = hornmx::run_suite(filter, seed, {}, threads);
    if (!write_text(output, hornmx::report_jsonl(records))) return fail("output: cannot write " + output);

    std::map<std::string, int> counts;
    for (const auto& r : records) ++counts[std::string(hornmx::verdict_name(r.verdict))];
    auto unexpected = hornmx::unexpected_failures(records, allow);
    std::cerr << records.size() << " records:";
    for (const auto& [k, n] : counts) std::cerr << " " << k << "=" << n;
    std::cerr << " unexpected_fail=" << unexpected.size() << "\n";
    for (const auto* r : unexpected) {
        std::cerr << "  FAIL " << r->id << " family=" << hornmx::family_name(r->family);
        if (r->r) std::cerr << " r=" << *r->r;
        if (r->t) std::cerr << " t=" << *r->t;
        std::cerr << " residual=" << r->residual << " scale=" << r->scale;
        if (!r->note.empty()) std::cerr << " (" << r->note << ")";
        std::cerr << "\n";
    }
    return unexpected.empty() ? ok : error;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Horn and confluent matrix functions: evaluation, regions, identity verification"};
    app.require_subcommand(1);

    std::string input, output = "-";
    auto* eval = app.add_subcommand("eval", "evaluate a function from a JSON job file");
    eval->add_option("job", input, "job file")->required();
    eval->add_option("-o,--output", output, "report path (- for stdout)");

    std::string function;
    double r = 0, s = 0;
    auto* region = app.add_subcommand("region", "test (r, s) against a function's convergence region");
    region->add_option("function", function)->required();
    region->add_option("r", r)->required();
    region->add_option("s", s)->required();

    std::string filter, verify_out = "-", allow_path = hornmx::default_allowlist_path();
    std::uint64_t seed = 1;
    unsigned threads = 0;
    auto* verify = app.add_subcommand("verify", "run the identity suite and write a JSON-lines report");
    verify->add_option("--filter", filter, "glob over identity ids");
    verify->add_option("--seed", seed, "suite seed");
    verify->add_option("-o,--output", verify_out, "report path (- for stdout)");
    verify->add_option("--allowlist", allow_path, "allowlist JSON");
    verify->add_option("--threads", threads, "worker threads (0: HORNMX_THREADS or hardware)");

    std::string table_out = "-";
    auto* table = app.add_subcommand("spec-table", "print the catalog as JSON");
    table->add_option("-o,--output", table_out, "path (- for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : error;
    }

    if (*eval) return cmd_eval(input, output);
    if (*region) return cmd_region(function, r, s);
    if (*verify) return cmd_verify(filter, seed, verify_out, allow_path, threads);
    if (*table) {
        if (!write_text(table_out, hornmx::spec_table_json().dump(2) + "\n")) return fail("output: cannot write " + table_out);
        return ok;
    }
    return error;
}
