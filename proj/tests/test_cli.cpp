#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CmdResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("TRIFORMS_CLI");
    REQUIRE_MESSAGE(p != nullptr, "TRIFORMS_CLI must point at the triforms binary");
    return p;
}

CmdResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("count outputs exact rows") {
    auto r = run("count \"sq+sq+3*sq\" 5 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "5 16\n");

    r = run("count tri 0 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0 1\n1 1\n2 0\n3 1\n");

    r = run("count hex 0 8 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,count\n0,1\n1,6\n2,0\n3,6\n4,6\n5,0\n6,0\n7,12\n8,0\n");
}

TEST_CASE("parse errors report a column and exit 2") {
    auto r = run("count \"3tri\" 0 1 2>&1");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("column 1") != std::string::npos);

    r = run("count \"tri+quad\" 0 1 2>&1");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("column 4") != std::string::npos);
}

TEST_CASE("count validates the range and truncation") {
    CHECK(run("count tri 5 3 2>&1").exit_code == 2);
    CHECK(run("count tri 0 10 --trunc 5 2>&1").exit_code == 2);
    CHECK(run("count tri 0 10 --trunc 20").exit_code == 0);
}

TEST_CASE("identity command") {
    auto r = run("identity c --trunc 512");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[PASS]") != std::string::npos);

    r = run("identity zz 2>&1");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("valid ids") != std::string::npos);

    CHECK(run("identity all --trunc 256").exit_code == 0);
}

TEST_CASE("theorem command with unknown id lists valid ids") {
    auto r = run("theorem nope 2>&1");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("thm3.1") != std::string::npos);

    CHECK(run("theorem thm3.3 --bound 300").exit_code == 0);
    CHECK(run("theorem witnesses").exit_code == 0);
}

TEST_CASE("a verified failure exits with 1 and shows the offending tuple") {
    // with bound 4 the grid search accepts (2,1), contradicting both the
    // expected set and the finite test
    auto r = run("classify gac --cap 2 --bound 4 2>&1");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("[FAIL]") != std::string::npos);
}

TEST_CASE("json output is deterministic across thread counts") {
    auto a = run("table section3 --bound 300 --format json --threads 1");
    auto b = run("table section3 --bound 300 --format json --threads 2");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());

    // TRIFORMS_THREADS is the fallback when --threads is absent
    auto c = run("table section3 --bound 300 --format json");
    setenv("TRIFORMS_THREADS", "1", 1);
    auto d = run("table section3 --bound 300 --format json");
    unsetenv("TRIFORMS_THREADS");
    CHECK(c.out == d.out);
}

TEST_CASE("json reports carry the stable schema") {
    auto r = run("theorem thm3.1 --bound 100 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"subject\"") != std::string::npos);
    CHECK(r.out.find("\"range\"") != std::string::npos);
    CHECK(r.out.find("\"status\"") != std::string::npos);
    CHECK(r.out.find("elapsed_ms") == std::string::npos);  // only with --timings

    r = run("theorem thm3.1 --bound 100 --format json --timings");
    CHECK(r.out.find("elapsed_ms") != std::string::npos);
}

TEST_CASE("csv report format has the documented header") {
    auto r = run("theorem thm3.1 --bound 50 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("subject,lo,hi,status,counterexample_n,expected,actual,witness\n", 0) == 0);
}

TEST_CASE("--out writes the report to a file") {
    std::string path = "/tmp/triforms_cli_out_test.json";
    std::remove(path.c_str());
    auto r = run("theorem thm3.1 --bound 50 --format json --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str().find("\"status\": \"pass\"") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("2>&1").exit_code == 2);
    CHECK(run("table \"\" 2>&1").exit_code == 2);
    CHECK(run("table nosuchsuite 2>&1").exit_code == 2);
    CHECK(run("count tri 0 3 --format yaml 2>&1").exit_code == 2);
}

TEST_CASE("table prints a summary line") {
    auto r = run("table identities --bound 256");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("6/6 passed") != std::string::npos);
}
