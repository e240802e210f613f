#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch() {
    fs::path d = fs::temp_directory_path() / ("hornmx_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

Outcome run(const std::string& args) {
    const fs::path d = scratch();
    const std::string cmd = std::string(HORNMX_CLI_PATH) + " " + args + " >" + (d / "out").string() + " 2>" +
                            (d / "err").string();
    int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(d / "out"), slurp(d / "err")};
}

std::string job(const std::string& text) {
    static int n = 0;
    fs::path p = scratch() / ("job" + std::to_string(n++) + ".json");
    std::ofstream(p) << text;
    return p.string();
}

}  // namespace

TEST(Cli, EvalZeroParamsIsOne) {
    Outcome r = run("eval " + job(R"({"function": "G1", "params": {"A": 0, "B": 0, "B'": 0}, "point": [0.3, 0.2]})"));
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"value\":[[[1.0,0.0]]]"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("\"converged\":true"), std::string::npos);
}

TEST(Cli, EvalMatrixParams) {
    Outcome r = run("eval " + job(R"({"function": "H1", "params": {"A": [[0.3, 0.1], [0, 0.4]], "B": [[1.3, 0.1], [0, 1.4]],
        "C": [[1.3, 0], [0.2, 1.1]], "C'": [[1.5, 0], [0, 1.5]]}, "point": [0.1, [0.05, 0.01]]})"));
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"region_verdict\":\"inside\""), std::string::npos) << r.out;
}

TEST(Cli, EvalErrorsNameTheField) {
    Outcome missing = run("eval " + job(R"({"function": "G1", "params": {"A": 1, "B": 1}, "point": [0.1, 0.1]})"));
    EXPECT_EQ(missing.code, 1);
    EXPECT_NE(missing.err.find("params.B': missing"), std::string::npos) << missing.err;

    Outcome unknown = run("eval " + job(R"({"function": "G9", "params": {}, "point": [0.1, 0.1]})"));
    EXPECT_EQ(unknown.code, 1);
    EXPECT_NE(unknown.err.find("function:"), std::string::npos) << unknown.err;

    Outcome point = run("eval " + job(R"({"function": "G1", "params": {"A": 1, "B": 1, "B'": 1}, "point": [0.1, "y"]})"));
    EXPECT_EQ(point.code, 1);
    EXPECT_NE(point.err.find("point[1]"), std::string::npos) << point.err;

    Outcome outside = run("eval " + job(R"({"function": "G1", "params": {"A": 1, "B": 1, "B'": 1}, "point": [0.6, 0.6],
        "options": {"region_policy": "enforce"}})"));
    EXPECT_EQ(outside.code, 1);
    EXPECT_NE(outside.err.find("point:"), std::string::npos) << outside.err;

    Outcome garbage = run("eval " + job("{not json"));
    EXPECT_EQ(garbage.code, 1);
    EXPECT_NE(garbage.err.find("input:"), std::string::npos) << garbage.err;
}

TEST(Cli, EvalNonConvergenceExitsTwo) {
    Outcome r = run("eval " + job(R"({"function": "G1", "params": {"A": 0.5, "B": 0.3, "B'": 0.2}, "point": [0.4, 0.4],
        "options": {"max_diagonal": 3}})"));
    EXPECT_EQ(r.code, 2) << r.err;
    EXPECT_NE(r.out.find("\"converged\":false"), std::string::npos);
}

TEST(Cli, RegionExitCodes) {
    Outcome in = run("region G1 0.3 0.3");
    EXPECT_EQ(in.code, 0);
    EXPECT_EQ(in.out.rfind("inside", 0), 0u) << in.out;
    EXPECT_EQ(run("region G1 0.6 0.6").code, 2);
    EXPECT_EQ(run("region G9 0.1 0.1").code, 1);
    EXPECT_EQ(run("region G1 -0.1 0.1").code, 1);
}

TEST(Cli, SpecTableListsEveryFunction) {
    Outcome r = run("spec-table");
    EXPECT_EQ(r.code, 0);
    for (const char* f : {"G1", "G2", "G3", "H1", "H7", "Gamma1", "Gamma2", "cH1", "cH11"})
        EXPECT_NE(r.out.find(std::string("\"") + f + "\""), std::string::npos) << f;
}

TEST(Cli, VerifyIsDeterministicAndHonoursAllowlist) {
    const fs::path d = scratch();
    Outcome a = run("verify --filter 'G1.*' --seed 1 --threads 1 -o " + (d / "a.jsonl").string());
    Outcome b = run("verify --filter 'G1.*' --seed 1 --threads 2 -o " + (d / "b.jsonl").string());
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(slurp(d / "a.jsonl"), slurp(d / "b.jsonl"));
    EXPECT_NE(a.err.find("unexpected_fail=0"), std::string::npos) << a.err;

    std::ofstream(d / "empty.json") << R"({"version": 1, "entries": []})";
    Outcome strict = run("verify --filter 'G1.*' --allowlist " + (d / "empty.json").string() + " -o /dev/null");
    EXPECT_EQ(strict.code, 1);
    EXPECT_NE(strict.err.find("FAIL G1.d3"), std::string::npos) << strict.err;

    std::ofstream(d / "bad.json") << R"({"entries": []})";
    Outcome bad = run("verify --filter 'G1.*' --allowlist " + (d / "bad.json").string() + " -o /dev/null");
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("version"), std::string::npos) << bad.err;
}
