// Drives the installed binary end to end. The harness passes the binary and
// golden-file locations in as compile definitions.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#ifndef FLIPTOP_CLI_PATH
#error "FLIPTOP_CLI_PATH must be defined"
#endif
#ifndef FLIPTOP_GOLDEN_DIR
#error "FLIPTOP_GOLDEN_DIR must be defined"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

// stdout captured, stderr dropped (the binary logs its config there)
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string("'") + FLIPTOP_CLI_PATH + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = out;
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string golden(const std::string& name) {
  return read_file(std::string(FLIPTOP_GOLDEN_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("aggregate spectrum matches the golden csv") {
  RunResult r = run_cli("spectrum --walk bn --n 3 --aggregate --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("spectrum_bn3_aggregate.csv"));
}

TEST_CASE("exact tv curve matches the golden csv") {
  RunResult r = run_cli("tv-curve --walk bn --n 3 --k-max 10 --exact-rational");
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("tv_bn3_exact.csv"));
  CHECK(r.out.find("7/8") != std::string::npos);
}

TEST_CASE("sn spectrum as json") {
  RunResult r = run_cli("spectrum --walk sn --n 3 --a 1/3 --format json --aggregate");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"num\":2,\"den\":3,\"multiplicity\":2") != std::string::npos);
  CHECK(r.out.find("\"num\":-1,\"den\":3,\"multiplicity\":1") != std::string::npos);
}

TEST_CASE("mixing time prints a bare step count") {
  RunResult r = run_cli("mixing-time --walk bn --n 4 --threshold 0.25 --k-max 40");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "7\n");

  RunResult far = run_cli("mixing-time --walk bn --n 4 --threshold 1e-30 --k-max 2");
  CHECK(far.exit_code == 0);
  CHECK(far.out == "not-reached\n");
}

TEST_CASE("bounds curve emits every column") {
  RunResult r = run_cli("bounds-curve --walk bn --n 4 --k-max 8 --with-tv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("k,lower,tv_exact,ds_upper,closed_upper,n,walk_kind") == 0);
  CHECK(r.out.find("\n0,0.5,") != std::string::npos);
}

TEST_CASE("simulation is reproducible across invocations") {
  std::string args = "simulate --walk bn --n 10 --steps 20 --trials 2000 --seed 99";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("k,mean_f,stderr,trials,seed,walk_kind,n") == 0);
  CHECK(a.out.find(",2000,99,bn,10") != std::string::npos);
}

TEST_CASE("verify subcommand reports and exits clean") {
  RunResult r = run_cli("verify --suite moments");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[PASS]") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.find("0 failures") != std::string::npos);
}

TEST_CASE("output lands in a file on request") {
  std::string path = "/tmp/fliptop_cli_test_" + std::to_string(getpid()) + ".csv";
  RunResult r = run_cli("spectrum --walk dn --n 3 --aggregate --format csv --out '" + path + "'");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::string text = read_file(path);
  CHECK(text.find("num,den,multiplicity") == 0);
  CHECK(text.find("\n3,5,8\n") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("bad invocations fail with useful codes") {
  CHECK(run_cli("spectrum --walk cn --n 3").exit_code != 0);   // unknown kind
  CHECK(run_cli("spectrum --walk bn").exit_code != 0);         // --n is required
  CHECK(run_cli("spectrum --walk bn-alpha --n 3").exit_code == 2);  // missing --alpha
  CHECK(run_cli("spectrum --walk bn --n 1").exit_code == 2);   // rank too small
  CHECK(run_cli("tv-curve --walk bn --n 9 --k-max 2").exit_code == 3);  // cap
  CHECK(run_cli("simulate --walk bn --n 4 --trials 10").exit_code != 0);  // --steps required
}
