#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#ifndef NETCONV_CLI_PATH
#error "NETCONV_CLI_PATH must point at the built command-line binary"
#endif

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int exit_code = -1;
    std::string output; // stdout and stderr combined
};

fs::path scratch_file(const std::string& tag) {
    static int counter = 0;
    return fs::temp_directory_path() /
           ("netconv_cli_" + tag + "_" + std::to_string(++counter) + ".txt");
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

CliResult run_cli(const std::string& args) {
    CliResult r;
    fs::path capture = scratch_file("cap");
    std::string cmd = std::string("\"") + NETCONV_CLI_PATH + "\" " + args + " > " +
                      capture.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    r.output = slurp(capture);
    std::error_code ec;
    fs::remove(capture, ec);
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

// Fields of the first CSV line starting with the given prefix.
std::vector<std::string> csv_line(const std::string& text, const std::string& prefix) {
    for (const auto& line : split(text, '\n'))
        if (line.rfind(prefix, 0) == 0) return split(line, ',');
    return {};
}

} // namespace

TEST_CASE("help and missing subcommands") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("density of the evens prints both estimates") {
    auto r = run_cli("density --family N --set 'n % 2 == 0' --horizon 10000");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "lower-estimate:"));
    CHECK(contains(r.output, "upper-estimate:"));
    CHECK(contains(r.output, "existence:"));
}

TEST_CASE("the cube diagonal is thin") {
    auto r = run_cli("density --family N^3 --set 'x1 == x2 && x2 == x3' --horizon 50 "
                     "--format csv");
    REQUIRE(r.exit_code == 0);
    auto fields = csv_line(r.output, "summary,");
    REQUIRE(fields.size() == 4);
    CHECK(std::stod(fields[1]) <= std::stod(fields[2]));
    CHECK(std::stod(fields[2]) <= 0.02);
}

TEST_CASE("truncated extrema of a swinging net") {
    auto lo = run_cli("liminf --net 'pow(-1, n)' --horizon 1000");
    CHECK(lo.exit_code == 0);
    CHECK(contains(lo.output, "liminf: -1"));

    auto hi = run_cli("limsup --net 'pow(-1, n)' --horizon 1000");
    CHECK(hi.exit_code == 0);
    CHECK(contains(hi.output, "limsup: 1"));
}

TEST_CASE("convergence verdicts drive the exit code") {
    CHECK(run_cli("converge --net '1/n' --limit 0 --horizon 4000").exit_code == 0);
    CHECK(run_cli("converge --net 'pow(-1, n)' --limit 0 --eps 1 --horizon 2000").exit_code ==
          1);
}

TEST_CASE("cauchy verdicts drive the exit code") {
    CHECK(run_cli("cauchy --net '1/n' --horizon 2000").exit_code == 0);
    CHECK(run_cli("cauchy --net 'pow(-1, n)' --eps 1 --horizon 2000").exit_code == 1);
}

TEST_CASE("tail density at a base point") {
    auto nat = run_cli("star --family N --gamma 1 --horizon 1000 --format csv");
    REQUIRE(nat.exit_code == 0);
    auto row = csv_line(nat.output, "1,");
    REQUIRE(row.size() == 3);
    CHECK(std::stod(row[1]) == 1.0);
    CHECK(row[2] == "yes");

    auto grid = run_cli("star --family N^2 --gamma 2 2 --horizon 200 --format csv");
    REQUIRE(grid.exit_code == 0);
    auto grow = csv_line(grid.output, "2:2,");
    REQUIRE(grow.size() == 3);
    CHECK(std::stod(grow[1]) >= 0.95);

    CHECK(run_cli("star --family div1 --gamma 3 --horizon 10000").exit_code == 0);
    CHECK(run_cli("star --family N --horizon 100").exit_code == 2);
}

TEST_CASE("classification and axiom validation") {
    auto c = run_cli("classify --net '1/n' --horizon 2000");
    CHECK(c.exit_code == 0);
    CHECK(contains(c.output, "bounded (M): yes"));

    auto a = run_cli("axioms --family div --horizon 50 --format csv");
    CHECK(a.exit_code == 0);
    CHECK(contains(a.output, "reflexivity,pass"));
    CHECK(contains(a.output, "directedness,pass"));
}

TEST_CASE("usage, parse, and evaluation failures exit with 2") {
    CHECK(run_cli("density --family Q --set 'n % 2 == 0' --horizon 100").exit_code == 2);
    CHECK(run_cli("density --family N --set 'n %% 2' --horizon 100").exit_code == 2);
    CHECK(run_cli("liminf --net '1/(n - 1)' --horizon 100").exit_code == 2);
    CHECK(run_cli("density --family N --set 'x2 == 1' --horizon 100").exit_code == 2);
}

TEST_CASE("an oversized enumeration exits with 3") {
    auto r = run_cli("density --family N^2 --set 'x1 == x2' --horizon 100000");
    CHECK(r.exit_code == 3);
    CHECK(contains(r.output, "resource limit"));
}

TEST_CASE("the out file always receives csv regardless of the stdout format") {
    fs::path out = scratch_file("out");
    auto r = run_cli("density --family N --set 'n % 2 == 0' --horizon 2000 --format text "
                     "--out " + out.string());
    CHECK(r.exit_code == 0);
    std::string written = slurp(out);
    CHECK(contains(written, "element,numerator,denominator,ratio"));
    CHECK(contains(written, "summary,"));
    std::error_code ec;
    fs::remove(out, ec);

    CHECK(run_cli("density --family N --set 'n % 2 == 0' --horizon 2000 "
                  "--out /nonexistent_dir_4242/x.csv").exit_code == 2);
}

TEST_CASE("repeated runs write byte-identical csv") {
    fs::path a = scratch_file("golden_a");
    fs::path b = scratch_file("golden_b");

    std::string density_cmd = "density --family div --set 'n % 2 == 1' --horizon 4096 "
                              "--format csv --out ";
    REQUIRE(run_cli(density_cmd + a.string()).exit_code == 0);
    REQUIRE(run_cli(density_cmd + b.string()).exit_code == 0);
    std::string first = slurp(a), second = slurp(b);
    CHECK_FALSE(first.empty());
    CHECK(first == second);

    std::string cauchy_cmd = "cauchy --net '1/n' --horizon 2000 --out ";
    REQUIRE(run_cli(cauchy_cmd + a.string()).exit_code == 0);
    REQUIRE(run_cli(cauchy_cmd + b.string()).exit_code == 0);
    CHECK(slurp(a) == slurp(b));

    std::error_code ec;
    fs::remove(a, ec);
    fs::remove(b, ec);
}

TEST_CASE("the worked-example table passes end to end") {
    auto r = run_cli("paper-examples --format csv");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "fixture,result,detail"));
}
