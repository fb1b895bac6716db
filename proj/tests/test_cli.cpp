// End-to-end command-line checks: exit-code contract, output formats, exact
// lambda parsing.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string tmp = "cli_out.tmp";
  std::string cmd = std::string(DYNSYM_BIN) + " " + args + " > " + tmp + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream f(tmp, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  r.out = ss.str();
  std::remove(tmp.c_str());
  return r;
}

}  // namespace

TEST_CASE("unsupported dimension exits 2") {
  auto r = run_cli("verify --dim 1");
  CHECK(r.code == 2);
}

TEST_CASE("unknown subcommand exits 2") {
  auto r = run_cli("frobnicate");
  CHECK(r.code == 2);
}

TEST_CASE("decimal lambda requires --approx") {
  auto r = run_cli("spectrum --system coulomb --lambda 0.1 --levels 1");
  CHECK(r.code == 2);
  CHECK(r.out.find("--approx") != std::string::npos);
}

TEST_CASE("spectrum: undeformed oscillator csv gives 1,2,3,4") {
  auto r = run_cli(
      "spectrum --system oscillator --lambda 0 --levels 4 --format csv");
  CHECK(r.code == 0);
  // header + one row per level; E_algebraic column exact
  CHECK(r.out.find("n,m_high,m_low,degeneracy,E_algebraic") != std::string::npos);
  CHECK(r.out.find("0,0,0,1,1,1,") != std::string::npos);
  CHECK(r.out.find("3,3,-3,4,4,4,") != std::string::npos);
}

TEST_CASE("spectrum: deformed coulomb flags the printed-value deviation") {
  auto r = run_cli(
      "spectrum --system coulomb --lambda 1/10 --levels 2 --format json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"-1/2\"") != std::string::npos);   // printed E_1
  CHECK(r.out.find("\"-29/90\"") != std::string::npos); // algebraic E_1
}

TEST_CASE("validate --levels 0: empty table, exit 0") {
  auto r = run_cli("validate --system oscillator --lambda 0 --levels 0 --format json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"spectrum\": []") != std::string::npos);
}

TEST_CASE("verify: oscillator 3-D prints the S_ij comparison table") {
  auto r = run_cli("verify --system oscillator --dim 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("I1") != std::string::npos);
  CHECK(r.out.find("I2") != std::string::npos);
  CHECK(r.out.find("MISMATCH") != std::string::npos);  // documented findings
}
