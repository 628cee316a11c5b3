// Exercises the installed CLI binary end to end: exit-status contract,
// parameter parsing, machine/table output and byte-level determinism of the
// numeric payload across repeated runs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_cli(const std::string& args, std::string* output = nullptr) {
  const std::string out_path = "/tmp/triprod_cli_test_out.txt";
  const std::string cmd =
      std::string(TRIPROD_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int rc = std::system(cmd.c_str());
  if (output) *output = slurp(out_path);
  if (WIFEXITED(rc)) return WEXITSTATUS(rc);
  return -1;
}

// The wall_time_ms field is the one legitimately run-dependent value.
std::string mask_wall_time(const std::string& s) {
  static const std::regex re("\"wall_time_ms\": [0-9.eE+-]+");
  return std::regex_replace(s, re, "\"wall_time_ms\": X");
}

}  // namespace

TEST_CASE("verify exits 0 on a passing identity") {
  std::string out;
  CHECK(run_cli("verify --id main_b1 --tol 1e-8", &out) == 0);
  CHECK(out.find("PASS") != std::string::npos);
}

TEST_CASE("verify exits 1 when the tolerance is unreachable") {
  // 1e-16 pushes the quadrature budget below the double-precision floor, so
  // the integral is reported unconverged and the check fails
  std::string out;
  CHECK(run_cli("verify --id main_b1 --tol 1e-16", &out) == 1);
  CHECK(out.find("FAIL") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("bogus-command") == 2);
  CHECK(run_cli("verify") == 2);                    // missing --id
  CHECK(run_cli("verify --id no_such_id") == 2);    // unknown identity
  CHECK(run_cli("verify --id main_b1 --format nope") == 2);
}

TEST_CASE("eval-product prints 1 at the origin") {
  std::string out;
  CHECK(run_cli("eval-product --b 1 --x 0", &out) == 0);
  CHECK(out == "1\n");
}

TEST_CASE("roots prints the requested records") {
  std::string out;
  CHECK(run_cli("roots --count 5", &out) == 0);
  int data_lines = 0;
  std::istringstream is(out);
  std::string line;
  std::getline(is, line);  // header
  while (std::getline(is, line))
    if (!line.empty()) ++data_lines;
  CHECK(data_lines == 5);
}

TEST_CASE("machine output is byte-identical across runs up to wall time") {
  std::string a, b;
  CHECK(run_cli("verify-all --filter t_alpha --format machine", &a) == 0);
  CHECK(run_cli("verify-all --filter t_alpha --format machine", &b) == 0);
  CHECK(mask_wall_time(a) == mask_wall_time(b));
  CHECK(a.find("\"id\": \"t_alpha\"") != std::string::npos);
  CHECK(a.find("\"id\": \"t_alpha_m1\"") != std::string::npos);
}

TEST_CASE("machine output can be written to a file") {
  const std::string path = "/tmp/triprod_cli_report.json";
  std::remove(path.c_str());
  CHECK(run_cli("verify --id main_b1 --format machine --output " + path) == 0);
  const std::string body = slurp(path);
  CHECK(body.find("\"id\": \"main_b1\"") != std::string::npos);
  CHECK(body.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("single-parameter override") {
  std::string out;
  CHECK(run_cli("verify --id residue_sum_b --b 0.6", &out) == 0);
  CHECK(out.find("b=0.6") != std::string::npos);
}
