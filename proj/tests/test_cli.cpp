#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "mbkit/cli.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string cli_bin() {
  const char* p = std::getenv("MBKIT_CLI_BIN");
  REQUIRE(p != nullptr);
  return p;
}

std::string fixture(const std::string& name) {
  const char* p = std::getenv("MBKIT_FIXTURES");
  REQUIRE(p != nullptr);
  return std::string(p) + "/" + name;
}

// Run the binary with stderr folded into stdout and capture both streams
// and the exit status.
RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "'" + cli_bin() + "' " +
                    args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
    r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("verify maps verdicts to exit codes") {
  auto pass = run("verify " + fixture("disk_max.json"));
  CHECK(pass.exit_code == 0);
  CHECK(pass.output.find("| disk_max | main |") != std::string::npos);
  CHECK(pass.output.find("pass") != std::string::npos);

  auto invalid = run("verify " + fixture("bad_index.json"));
  CHECK(invalid.exit_code == 2);
  CHECK(invalid.output.find("index exceeds m - dim") != std::string::npos);

  auto failing = run("verify " + fixture("adversarial.json"));
  CHECK(failing.exit_code == 1);
  CHECK(failing.output.find("division inexact") != std::string::npos);
}

TEST_CASE("a batch reports every file and the worst exit code") {
  auto r = run("verify " + fixture("disk_max.json") + " " +
               fixture("adversarial.json"));
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("disk_max") != std::string::npos);
  CHECK(r.output.find("adversarial") != std::string::npos);

  auto worst = run("verify " + fixture("disk_max.json") + " " +
                   fixture("bad_index.json") + " " +
                   fixture("adversarial.json"));
  CHECK(worst.exit_code == 2);
}

TEST_CASE("batch output is deterministic and independent of parallelism") {
  std::string args = "verify " + fixture("disk_max.json") + " " +
                     fixture("adversarial.json") + " " +
                     fixture("bad_index.json") + " " +
                     fixture("disk_max.json");
  auto serial = run(args, "MBKIT_MAX_PARALLEL=1");
  auto wide = run(args, "MBKIT_MAX_PARALLEL=8");
  auto again = run(args, "MBKIT_MAX_PARALLEL=8");
  CHECK(serial.output == wide.output);
  CHECK(wide.output == again.output);
  CHECK(serial.exit_code == wide.exit_code);
}

TEST_CASE("verify emits machine-readable reports on request") {
  auto r = run("verify --format json " + fixture("disk_max.json"));
  CHECK(r.exit_code == 0);
  mbkit::json parsed = mbkit::json::parse(r.output);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].at("verdict") == mbkit::json("pass"));
  CHECK(parsed[0].at("quotient") == mbkit::json::parse("[0, 1]"));

  auto viam = run("verify --format json --via-morsification " +
                  fixture("disk_max.json"));
  CHECK(viam.exit_code == 0);
  mbkit::json mr = mbkit::json::parse(viam.output);
  CHECK(mr[0].contains("r_h"));

  auto unknown = run("verify --format yaml " + fixture("disk_max.json"));
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("homology prints the polynomial and a torsion summary") {
  auto torus = run("homology " + fixture("torus_model.json"));
  CHECK(torus.exit_code == 0);
  CHECK(torus.output == "P_t = 1 + 2t + t^2\ntorsion: none\n");

  auto twisted = run("homology " + fixture("circle_model.json") +
                     " --twist " + fixture("circle_twist.json"));
  CHECK(twisted.exit_code == 0);
  CHECK(twisted.output == "P_t = 0\ntorsion: [2] in degree 0\n");

  auto point = run("homology " + fixture("point_model.json"));
  CHECK(point.exit_code == 0);
  CHECK(point.output == "P_t = 1\ntorsion: none\n");

  auto missing = run("homology /nonexistent.json");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("flow audits map failures to exit codes") {
  auto good = run("flow " + fixture("s2_double.json") +
                  " --expect [1,0,1] --restricted " +
                  fixture("s2_double_restricted.json"));
  CHECK(good.exit_code == 0);
  CHECK(good.output.find("boundary squared: pass") != std::string::npos);
  CHECK(good.output.find("sign transport: pass") != std::string::npos);
  CHECK(good.output.find("kernel ranks per degree") != std::string::npos);

  auto corrupt = run("flow " + fixture("s2_double_corrupt.json"));
  CHECK(corrupt.exit_code == 1);
  CHECK(corrupt.output.find("d^2 != 0 at (p1, q1)") != std::string::npos);

  auto malformed = run("flow " + fixture("missing_height.json"));
  CHECK(malformed.exit_code == 2);
  CHECK(malformed.output.find("height_order") != std::string::npos);

  auto wrong = run("flow " + fixture("s2_double.json") + " --expect [9]");
  CHECK(wrong.exit_code == 1);
  CHECK(wrong.output.find("homology reference: fail") != std::string::npos);
}

TEST_CASE("catalog subcommands list, show, and run") {
  auto list = run("catalog list");
  CHECK(list.exit_code == 0);
  CHECK(list.output.find("disk_max\n") != std::string::npos);
  CHECK(list.output.find("sphere_height\n") != std::string::npos);

  auto show = run("catalog show disk_max");
  CHECK(show.exit_code == 0);
  CHECK(mbkit::json::parse(show.output).at("name") ==
        mbkit::json("disk_max"));

  auto shown_again = run("catalog show disk_max");
  CHECK(show.output == shown_again.output);

  auto missing = run("catalog show nosuch");
  CHECK(missing.exit_code == 2);
  CHECK(missing.output.find("no catalog entry") != std::string::npos);

  auto all = run("catalog run");
  CHECK(all.exit_code == 0);
  CHECK(all.output.find("all entries match") != std::string::npos);

  auto bogus = run("catalog tabulate");
  CHECK(bogus.exit_code == 2);
}

TEST_CASE("morsify prints the spread table and both counting polynomials") {
  auto r = run("morsify " + fixture("disk_max.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("| degree | interior | type_N | type_D |") !=
        std::string::npos);
  CHECK(r.output.find("counting (morsified): 3 + 3t + t^2") !=
        std::string::npos);
  CHECK(r.output.find("counting (assembled): 3 + 3t + t^2") !=
        std::string::npos);
  CHECK(r.output.find("counting identity: pass") != std::string::npos);
}

TEST_CASE("verify accepts a choices file for the morsified route") {
  std::string path = std::string(std::tmpnam(nullptr)) + ".json";
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs(R"({"max": [1], "rim": [2, 2]})", f);
    std::fclose(f);
  }
  auto r = run("verify --via-morsification --format json --choices " + path +
               " " + fixture("disk_max.json"));
  std::remove(path.c_str());
  CHECK(r.exit_code == 0);
  mbkit::json parsed = mbkit::json::parse(r.output);
  CHECK(parsed[0].at("r_h") == mbkit::json::parse("[1, 1]"));
  CHECK(parsed[0].at("corrections") == mbkit::json::parse("[1]"));
  CHECK(parsed[0].at("quotient") == mbkit::json::parse("[0, 1]"));
}
