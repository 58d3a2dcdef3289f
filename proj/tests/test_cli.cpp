#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Path of the built command-line binary, injected by the build so the tests
// exercise the real executable end to end.
#ifndef CLI_BINARY_PATH
#error "CLI_BINARY_PATH must be defined"
#endif

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << text;
}

}  // namespace

TEST_CASE("usage errors exit with 2, help with 0") {
  CHECK(run("--help") == 0);
  CHECK(run("audit --help") == 0);
  CHECK(run("") == 2);                    // a subcommand is required
  CHECK(run("frobnicate") == 2);          // unknown subcommand
  CHECK(run("audit --field x") == 2);     // unknown field
  CHECK(run("audit --tol nope=1") == 2);  // unknown tolerance key
  CHECK(run("lattice --in /nonexistent/path.json") == 2);
  CHECK(run("decompose --in /nonexistent/path.json") == 2);
}

TEST_CASE("a small audit passes and its JSON is byte-identical across processes") {
  const std::string a = "/tmp/daghilb_cli_audit_a.json";
  const std::string b = "/tmp/daghilb_cli_audit_b.json";
  CHECK(run("audit --trials 3 --dims 1,2,3 --seed 5 --json-only --out " + a) == 0);
  CHECK(run("audit --trials 3 --dims 1,2,3 --seed 5 --json-only --out " + b) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).find("\"all_passed\": true") != std::string::npos);
  // a different seed still passes but samples differently
  const std::string c = "/tmp/daghilb_cli_audit_c.json";
  CHECK(run("audit --trials 3 --dims 1,2,3 --seed 6 --json-only --out " + c) == 0);
  CHECK(slurp(a) != slurp(c));
}

TEST_CASE("decompose: file input, sampling, odd-dimension handling") {
  // the 1x1 complex example splits into two conjugate phases
  const std::string in = "/tmp/daghilb_cli_dec_in.json";
  write_file(in, R"({"field": "C", "rows": 1, "cols": 1, "data": [[[0.3, 0.0]]]})");
  const std::string out = "/tmp/daghilb_cli_dec_out.json";
  CHECK(run("decompose --in " + in + " --out " + out) == 0);
  CHECK(slurp(out).find("\"term_count\": 2") != std::string::npos);

  // sampled odd real dimension: refused without the pad, accepted with it
  CHECK(run("decompose --field r --dim 3 --seed 2") == 2);
  CHECK(run("decompose --field r --dim 3 --seed 2 --pad --out " + out) == 0);
  CHECK(slurp(out).find("\"padded\": true") != std::string::npos);
  // even dimensions run everywhere
  CHECK(run("decompose --field h --dim 4 --seed 2") == 0);
  CHECK(run("decompose --field c --dim 5 --seed 2") == 0);
}

TEST_CASE("lattice: named subspaces in, verdicts out") {
  const std::string in = "/tmp/daghilb_cli_lat_in.json";
  write_file(in, R"({
    "ambient": 3, "field": "R",
    "subspaces": [
      {"name": "x",  "basis": [[[1.0], [0.0], [0.0]]]},
      {"name": "xy", "basis": [[[1.0], [0.0], [0.0]], [[0.0], [1.0], [0.0]]]}
    ]
  })");
  const std::string out = "/tmp/daghilb_cli_lat_out.json";
  CHECK(run("lattice --in " + in + " --out " + out) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("\"all_passed\": true") != std::string::npos);
  // x <= xy shows up in the order table
  CHECK(text.find("\"leq\"") != std::string::npos);
  // an empty file is an empty report, not an error
  const std::string empty = "/tmp/daghilb_cli_lat_empty.json";
  write_file(empty, "");
  CHECK(run("lattice --in " + empty) == 0);
  // malformed input is a usage error
  const std::string bad = "/tmp/daghilb_cli_lat_bad.json";
  write_file(bad, R"({"field": "R"})");
  CHECK(run("lattice --in " + bad) == 2);
}

TEST_CASE("orthomodularity probe distinguishes definite from indefinite forms") {
  const std::string pd = "/tmp/daghilb_cli_soler_pd.json";
  write_file(pd, R"({"field": "C", "dim": 3})");
  CHECK(run("soler --in " + pd + " --trials 10 --seed 4") == 0);

  // an indefinite diagonal form has an isotropic line: orthomodularity fails
  const std::string indef = "/tmp/daghilb_cli_soler_indef.json";
  write_file(indef, R"({
    "field": "R", "dim": 2,
    "form": {"field": "R", "rows": 2, "cols": 2,
             "data": [[[1.0], [0.0]], [[0.0], [-1.0]]]}
  })");
  CHECK(run("soler --in " + indef + " --trials 10 --seed 4") == 1);

  // a non-hermitian form fails its hypothesis check
  const std::string nonherm = "/tmp/daghilb_cli_soler_nh.json";
  write_file(nonherm, R"({
    "field": "R", "dim": 2,
    "form": {"field": "R", "rows": 2, "cols": 2,
             "data": [[[1.0], [1.0]], [[0.0], [1.0]]]}
  })");
  CHECK(run("soler --in " + nonherm + " --trials 5 --seed 4") == 1);

  // dimension zero: vacuously fine
  const std::string zero = "/tmp/daghilb_cli_soler_zero.json";
  write_file(zero, R"({"field": "H", "dim": 0})");
  CHECK(run("soler --in " + zero) == 0);
}

TEST_CASE("the seed environment fallback is honoured") {
  const std::string a = "/tmp/daghilb_cli_env_a.json";
  const std::string b = "/tmp/daghilb_cli_env_b.json";
  const std::string base = std::string(CLI_BINARY_PATH) +
                           " audit --trials 2 --dims 1,2 --json-only --out ";
  const int ra = std::system(("DAGHILB_SEED=42 " + base + a + " >/dev/null 2>&1").c_str());
  REQUIRE(WIFEXITED(ra));
  CHECK(WEXITSTATUS(ra) == 0);
  const int rb = std::system((base + b + " --seed 42 >/dev/null 2>&1").c_str());
  REQUIRE(WIFEXITED(rb));
  CHECK(WEXITSTATUS(rb) == 0);
  CHECK(slurp(a) == slurp(b));
}
