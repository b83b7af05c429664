#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

// PPF_CLI_PATH is injected by the build system and points at the ppfunctor
// binary under test.

struct RunResult {
  int exit_code;
  std::string out;
};

static RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(PPF_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST_CASE("decompose reproduces the hand-checked kS3 table at p=3") {
  RunResult r = run_cli("decompose --group S3 --p 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"(1,1,F)\": 2") != std::string::npos);
  CHECK(r.out.find("\"(C3,1,triv)\": 1") != std::string::npos);
  CHECK(r.out.find("\"(C3,inv,F)\": 1") != std::string::npos);
  // the config block records the arithmetic setup
  CHECK(r.out.find("\"p\": 3") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
  for (const char* args : {"decompose --group S3 --p 3", "pairs --group D8 --p 2",
                           "blocks --group A4 --p 3"}) {
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("validation failures exit with code 1") {
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("decompose --group S3 --p 4").exit_code == 1);
  CHECK(run_cli("decompose --group Q9 --p 3").exit_code == 1);
  CHECK(run_cli("nilpotent --group S3 --p 2 --block 5").exit_code == 1);
}

TEST_CASE("equivalence and nilpotency verdicts over the CLI") {
  RunResult eq = run_cli("equivalent --p 2 --left S3:principal --right C2:principal");
  CHECK(eq.exit_code == 0);
  CHECK(eq.out.find("\"equivalent\": true") != std::string::npos);

  RunResult nil = run_cli("nilpotent --group S3 --p 3");
  CHECK(nil.exit_code == 0);
  CHECK(nil.out.find("\"nilpotent\": false") != std::string::npos);

  RunResult br = run_cli("broue --group A4 --p 3");
  CHECK(br.exit_code == 0);
  CHECK(br.out.find("\"functorially_equivalent\": true") != std::string::npos);
}

TEST_CASE("species report lists idempotents and their lifts") {
  RunResult r = run_cli("species --group C3 --p 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"num_pair_classes\": 2") != std::string::npos);
  CHECK(r.out.find("\"num_diagonal_classes\": 3") != std::string::npos);
  CHECK(r.out.find("\"tilde_lift\"") != std::string::npos);
}

TEST_CASE("selftest passes") {
  RunResult r = run_cli("selftest");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"passed\": true") != std::string::npos);
}
