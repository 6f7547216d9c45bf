#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

// End-to-end tests against the installed binary: every invocation here goes
// through the real argv parsing, output formatting, and exit-code paths.

namespace {

struct RunResult {
    std::string out;
    int code = -1;
};

RunResult run_shell(const std::string& shell_cmd) {
    FILE* p = popen(shell_cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    RunResult r;
    r.out = out;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// stdout only; stderr dropped
RunResult run(const std::string& args, const std::string& env_prefix = "") {
    return run_shell(env_prefix + std::string(K3SMOOTH_CLI_PATH) + " " + args + " 2>/dev/null");
}

// stdout and stderr interleaved
RunResult run_merged(const std::string& args) {
    return run_shell(std::string(K3SMOOTH_CLI_PATH) + " " + args + " 2>&1");
}

nlohmann::json parse_json(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

TEST_CASE("check-quartic text verdicts and exit codes") {
    RunResult smooth = run("check-quartic 'x^4 + y^4 + z^4 + t^4'");
    CHECK(smooth.code == 0);
    CHECK(smooth.out.find("verdict: SMOOTH") != std::string::npos);

    RunResult holds = run("check-quartic 't^4 + x^2*y^2 + x^2*z^2 + y^2*z^2'");
    CHECK(holds.code == 0);
    CHECK(holds.out.find("verdict: CRITERION_HOLDS") != std::string::npos);
    CHECK(holds.out.find("singular scheme: dimension 0, degree 9") != std::string::npos);

    RunResult fails = run("check-quartic 'x*y^3 + y*z^3 + t^4'");
    CHECK(fails.code == 0);
    CHECK(fails.out.find("verdict: CRITERION_FAILS_INCONCLUSIVE") != std::string::npos);
    CHECK(fails.out.find("h1(J(4)) = 1") != std::string::npos);

    RunResult na = run("check-quartic 'x^2*y^2'");
    CHECK(na.code == 3);
    CHECK(na.out.find("verdict: NOT_APPLICABLE_POSITIVE_DIM") != std::string::npos);
}

TEST_CASE("check-quartic json document") {
    RunResult r = run("check-quartic 'x*y^3 + y*z^3 + t^4' --format json");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("{\n  \"schema_version\": 1,", 0) == 0);
    nlohmann::json j = parse_json(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["verdict"] == "CRITERION_FAILS_INCONCLUSIVE");
    CHECK(j["h1_J4"] == 1);
    CHECK(j["singular_scheme"]["empty"] == false);
    CHECK(j["singular_scheme"]["dimension"] == 0);
    CHECK(j["singular_scheme"]["degree"] == 21);
    CHECK(j["betti"] == nlohmann::json::parse("[[-3,-3,-3,-3],[-4,-5,-6,-6,-6],[-7,-8]]"));
    CHECK(j["cohomology"]["4"]["h1"] == 1);
    CHECK(j["cohomology"]["4"]["h0"] == 15);
    CHECK(j["notes"].is_array());
    CHECK(j["input"].is_string());
    CHECK(j["jacobian"].is_array());
    CHECK(j["saturation"].is_array());
}

TEST_CASE("output is byte-identical across runs") {
    const std::string cmd = "check-quartic 't^4 + x^3*y - x*y^3' --format json";
    RunResult a = run(cmd);
    RunResult b = run(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("usage and input errors exit 2") {
    CHECK(run_merged("no-such-subcommand").code == 2);
    RunResult bad = run_merged("check-quartic 'x^4 + '");
    CHECK(bad.code == 2);
    CHECK(bad.out.find("input error:") != std::string::npos);
    CHECK(run_merged("check-quartic 'x^3 + y^3'").code == 2);
    CHECK(run_merged("check-quartic").code == 2);  // no input at all
    RunResult both = run_merged("check-quartic 'x^4' --file /tmp/nope.txt");
    CHECK(both.code == 2);
    CHECK(run("--help").code == 0);
    CHECK(run("check-quartic --help").code == 0);
}

TEST_CASE("twist range: flag beats environment, malformed values rejected") {
    const std::string poly = "'t^4 + x^2*y^2 + x^2*z^2 + y^2*z^2'";
    RunResult env = run("check-quartic " + poly + " --format json",
                        "K3SMOOTH_TWIST_RANGE=0:5 ");
    nlohmann::json je = parse_json(env.out);
    CHECK(je["cohomology"].size() == 6);
    CHECK(je["cohomology"].contains("0"));
    CHECK(!je["cohomology"].contains("-1"));

    RunResult flag = run("check-quartic " + poly + " --twist-range 2:6 --format json",
                         "K3SMOOTH_TWIST_RANGE=0:5 ");
    nlohmann::json jf = parse_json(flag.out);
    CHECK(jf["cohomology"].size() == 5);
    CHECK(jf["cohomology"].contains("2"));
    CHECK(!jf["cohomology"].contains("0"));

    CHECK(run("check-quartic " + poly + " --twist-range 5:8").code == 2);
    CHECK(run("check-quartic " + poly + " --twist-range 6:2").code == 2);
    CHECK(run("check-quartic " + poly + " --twist-range abc").code == 2);
    CHECK(run("check-quartic " + poly, "K3SMOOTH_TWIST_RANGE=5:8 ").code == 2);
}

TEST_CASE("batch input preserves order and exit code escalates") {
    const char* path = "/tmp/k3smooth_test_batch.txt";
    {
        std::ofstream f(path);
        f << "# reference quartics\n"
          << "x^4 + y^4 + z^4 + t^4\n"
          << "\n"
          << "x*y^3 + y*z^3 + t^4\n";
    }
    RunResult text = run(std::string("check-quartic --file ") + path);
    CHECK(text.code == 0);
    size_t first = text.out.find("== [1] ==");
    size_t second = text.out.find("== [2] ==");
    REQUIRE(first != std::string::npos);
    REQUIRE(second != std::string::npos);
    CHECK(first < second);
    CHECK(text.out.find("verdict: SMOOTH") < second);
    CHECK(text.out.find("verdict: CRITERION_FAILS_INCONCLUSIVE") > second);

    RunResult jr = run(std::string("check-quartic --file ") + path + " --format json");
    nlohmann::json j = parse_json(jr.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["reports"].size() == 2);
    CHECK(j["reports"][0]["verdict"] == "SMOOTH");
    CHECK(j["reports"][1]["verdict"] == "CRITERION_FAILS_INCONCLUSIVE");

    {
        std::ofstream f(path, std::ios::app);
        f << "x^2*y^2\n";
    }
    CHECK(run(std::string("check-quartic --file ") + path).code == 3);
    std::remove(path);

    CHECK(run("check-quartic --file /tmp/does_not_exist_k3.txt").code == 2);
}

TEST_CASE("saturate subcommand") {
    RunResult r = run("saturate 'x^2, x*y, x*z, x*t'");
    CHECK(r.code == 0);
    CHECK(r.out == "(x)\n");
    RunResult j = run("saturate 'x^2, x*y, x*z, x*t' --format json");
    nlohmann::json js = parse_json(j.out);
    CHECK(js["schema_version"] == 1);
    CHECK(js["generators"] == nlohmann::json::parse("[\"x\"]"));
    // already-saturated input passes through
    RunResult fixed = run("saturate 'x*y, x*z, y*z, t^3'");
    CHECK(fixed.out == "(y*z, x*z, x*y, t^3)\n");
}

TEST_CASE("resolve subcommand with exactness probe") {
    RunResult j = run("resolve 'x*y, x*z, y*z, t^3' --format json");
    CHECK(j.code == 0);
    nlohmann::json js = parse_json(j.out);
    CHECK(js["betti"] == nlohmann::json::parse("[[-2,-2,-2,-3],[-3,-3,-5,-5,-5],[-6,-6]]"));

    RunResult probed = run("resolve 'x*y, x*z, y*z, t^3' --probe-degree 6");
    CHECK(probed.code == 0);
    CHECK(probed.out.find("exactness verified through degree 6") != std::string::npos);

    CHECK(run_merged("resolve '0'").code == 2);
}

TEST_CASE("cohomology subcommand requires a saturated ideal") {
    RunResult ok = run("cohomology 'x*y, x*z, y*z, t^3' --format json");
    CHECK(ok.code == 0);
    nlohmann::json js = parse_json(ok.out);
    CHECK(js["method"] == "checked");
    CHECK(js["cohomology"]["4"]["h1"] == 0);
    CHECK(js["cohomology"]["4"]["h0"] == 26);

    RunResult bad = run_merged("cohomology 'x^2, x*y, x*z, x*t'");
    CHECK(bad.code == 2);
    CHECK(bad.out.find("not saturated") != std::string::npos);

    // positive-dimensional saturated ideal: strand method only
    RunResult line = run("cohomology 'x, y' --format json");
    CHECK(line.code == 0);
    CHECK(parse_json(line.out)["method"] == "resolution");
}

TEST_CASE("moduli subcommands") {
    RunResult dim = run("moduli-dim --r 2 --lsq 4 --c2 4");
    CHECK(dim.code == 0);
    CHECK(dim.out == "6\n");
    nlohmann::json jd = parse_json(run("moduli-dim --r 2 --lsq 4 --c2 4 --format json").out);
    CHECK(jd["pspl_dimension"] == 6);
    CHECK(jd["chi_FF"] == -4);
    CHECK(jd["input"]["r"] == 2);

    RunResult syz = run("syzygy-invariants --r 2 --lsq 4 --c2 4 --w 5");
    CHECK(syz.out == "r = 3, Lsq = 4, c2 = 0\n");
    RunResult ext = run("extension-invariants --r 2 --lsq 4 --c2 4 --v 3");
    CHECK(ext.out == "r = 5, Lsq = 4, c2 = 4\n");

    nlohmann::json ji =
        parse_json(run("lagrangian-identities --r 2 --lsq 4 --c2 4 --w 7 --v 1 --format json").out);
    CHECK(ji["syzygy_identity"]["lhs"] == -70);
    CHECK(ji["syzygy_identity"]["rhs"] == -70);
    CHECK(ji["extension_identity"]["lhs"] == -6);
    CHECK(ji["extension_identity"]["rhs"] == -6);
    CHECK(ji["u"] == -2);
    CHECK(ji["h0"] == 2);
    CHECK(ji["syzygy"]["r"] == 5);

    CHECK(run_merged("moduli-dim --r 0 --lsq 0 --c2 0").code == 2);
    CHECK(run_merged("moduli-dim --r 1 --lsq 3 --c2 0").code == 2);
    CHECK(run_merged("syzygy-invariants --r 2 --lsq 4 --c2 4 --w 3").code == 2);
    CHECK(run_merged("extension-invariants --r 2 --lsq 4 --c2 4 --v 0").code == 2);
}

TEST_CASE("every json document leads with schema_version") {
    for (const char* cmd :
         {"check-quartic 'x^4 + y^4 + z^4 + t^4' --format json",
          "saturate 'x*y' --format json", "resolve 'x*y' --format json",
          "cohomology 'x*y, x*z, y*z, t^3' --format json",
          "moduli-dim --r 1 --lsq 0 --c2 0 --format json",
          "syzygy-invariants --r 1 --lsq 0 --c2 0 --w 3 --format json",
          "lagrangian-identities --r 1 --lsq 0 --c2 0 --w 3 --v 1 --format json"}) {
        RunResult r = run(cmd);
        CHECK(r.code == 0);
        CHECK(r.out.rfind("{\n  \"schema_version\": 1", 0) == 0);
    }
}
