// Exercises the installed binary end to end: exit codes, CSV shape,
// determinism, and the validation suite's negative control.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {
std::string g_binary;

int run(const std::string& args) {
  const std::string cmd = g_binary + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("configuration errors exit with status 2") {
  CHECK(run("unknown-subcommand") == 2);
  CHECK(run("steady-sweep --sweep nonsense") == 2);
  CHECK(run("trajectory --state-s bogus --t-max 1 --steps 16 --out /tmp/qsa_bogus.csv") == 2);
  CHECK(run("steady-sweep --sweep frequency:0:1:3 --out /tmp/qsa_bogus.csv") == 2);
}

TEST_CASE("steady sweep produces a deterministic CSV with a manifest") {
  const std::string out1 = "/tmp/qsa_sweep_1.csv";
  const std::string out2 = "/tmp/qsa_sweep_2.csv";
  const std::string args =
      "steady-sweep --jy 1 --gamma 10 --Gamma 1 "
      "--sweep omega-a:0.5:2:5 --sweep jx:0:2:5 --out ";
  REQUIRE(run(args + out1) == 0);
  REQUIRE(run(args + out2 + " --threads 3") == 0);

  const std::string a = slurp(out1), b = slurp(out2);
  CHECK(a == b);  // worker scheduling must not leak into the output
  CHECK(a.find("concurrence,eof,mutual_info,beta_eff_s") != std::string::npos);
  // 25 rows + header
  CHECK(std::count(a.begin(), a.end(), '\n') == 26);
  CHECK(slurp(out1 + ".manifest").find("gamma=10") != std::string::npos);
}

TEST_CASE("single-point sweep degenerates to one row") {
  const std::string out = "/tmp/qsa_sweep_single.csv";
  REQUIRE(run("steady-sweep --jy 1 --gamma 10 --Gamma 1 --sweep jx:1:1:1 --out " +
              out) == 0);
  const std::string csv = slurp(out);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}

TEST_CASE("trajectory run emits the rate and distance columns") {
  const std::string out = "/tmp/qsa_traj.csv";
  REQUIRE(run("trajectory --preset fig2a --t-max 6 --steps 301 --out " + out) == 0);
  const std::string csv = slurp(out);
  CHECK(csv.find("t,d_sa,d_s,mi,eof,sigma_sa,sigma_s,sigma_a,mi_rate,"
                 "entropy_production,heat_s,decomp_residual") == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 302);
  const std::string mf = slurp(out + ".manifest");
  CHECK(mf.find("preset=fig2a") != std::string::npos);
  CHECK(mf.find("Gamma=0.1") != std::string::npos);
}

TEST_CASE("preset flags can be overridden") {
  const std::string out = "/tmp/qsa_traj_override.csv";
  REQUIRE(run("trajectory --preset fig2a --gamma 10 --Gamma 1 --t-max 4 "
              "--steps 201 --out " + out) == 0);
  const std::string mf = slurp(out + ".manifest");
  CHECK(mf.find("gamma=10") != std::string::npos);
  CHECK(mf.find("Gamma=1") != std::string::npos);
}

TEST_CASE("validation suite passes, and the corrupted oracle fails it") {
  CHECK(run("validate") == 0);
  CHECK(run("validate --corrupt-analytic") == 1);
}

int main(int argc, char** argv) {
  if (argc > 1) g_binary = argv[1];
  doctest::Context ctx;
  ctx.applyCommandLine(1, argv);
  return ctx.run();
}
