#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "pwcalc/matrix_io.hpp"
#include "support.hpp"

using namespace pwtest;
namespace fs = std::filesystem;

namespace {

std::string cli_path() { return PWCALC_CLI_PATH; }

struct RunResult {
  int exit_code = -1;
  bool exited = false;  // false means the process died on a signal
  std::string out;
};

// Runs the CLI from `workdir` with stderr dropped; stdout is captured byte for byte.
RunResult run_cli(const std::string& args, const std::string& workdir) {
  const std::string cmd =
      "cd '" + workdir + "' && '" + cli_path() + "' " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exited = WIFEXITED(status);
  r.exit_code = r.exited ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> golden_invocations() {
  std::ifstream in(source_dir() + "/tests/golden/invocations.txt");
  REQUIRE(in.good());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

std::string golden_path(size_t i) {
  char leaf[32];
  std::snprintf(leaf, sizeof leaf, "golden_%02zu.json", i);
  return source_dir() + "/tests/golden/" + leaf;
}

fs::path fresh_dir(const std::string& leaf) {
  const fs::path dir = fs::temp_directory_path() / leaf;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("golden invocations reproduce their reports byte for byte") {
  const auto lines = golden_invocations();
  REQUIRE(lines.size() == 10);
  for (size_t i = 0; i < lines.size(); ++i) {
    CAPTURE(lines[i]);
    const RunResult r = run_cli(lines[i], source_dir());
    REQUIRE(r.exited);
    CHECK(r.exit_code == 0);
    const std::string want = read_text_file(golden_path(i));
    CHECK_MESSAGE(r.out == want, ("report drifted for: " + lines[i]));
  }
}

TEST_CASE("reports are deterministic across repeated runs") {
  const std::string args =
      "compute --fn geometric --alpha 0.5 --a fixtures/invertible_00_spd_d2_a.json "
      "--b fixtures/invertible_00_spd_d2_b.json";
  const RunResult first = run_cli(args, source_dir());
  const RunResult second = run_cli(args, source_dir());
  REQUIRE(first.exited);
  REQUIRE(second.exited);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK_FALSE(first.out.empty());
}

TEST_CASE("--out routes the report to a file") {
  const fs::path dir = fresh_dir("pwcalc_cli_out");
  const std::string base =
      "entropy --a fixtures/kernel_00_rank1_d3_a.json --b fixtures/kernel_00_rank1_d3_b.json";
  const RunResult direct = run_cli(base, source_dir());
  REQUIRE(direct.exited);
  REQUIRE(direct.exit_code == 0);
  const std::string out_file = (dir / "report.json").string();
  const RunResult filed = run_cli(base + " --out " + out_file, source_dir());
  REQUIRE(filed.exited);
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());

  // The argv echo records the actual invocation, so the filed report carries
  // the extra --out pair; every other field matches the stdout report.
  auto from_file = nlohmann::json::parse(read_text_file(out_file));
  auto from_pipe = nlohmann::json::parse(direct.out);
  REQUIRE(from_file.contains("argv"));
  CHECK(from_file["argv"].size() == from_pipe["argv"].size() + 2);
  CHECK(from_file["argv"].back().get<std::string>() == out_file);
  from_file.erase("argv");
  from_pipe.erase("argv");
  CHECK(from_file == from_pipe);

  // Repeating the identical invocation reproduces the file byte for byte.
  const std::string once = read_text_file(out_file);
  const RunResult again = run_cli(base + " --out " + out_file, source_dir());
  REQUIRE(again.exited);
  CHECK(again.exit_code == 0);
  CHECK(read_text_file(out_file) == once);
}

TEST_CASE("compare gates the perspective routes on singular operands") {
  // Shared kernel: both pivots fail the gate, the spectral route stands alone.
  const RunResult both = run_cli(
      "compare --fn geometric --alpha 0.5 --eps-study --a "
      "fixtures/kernel_00_rank1_d3_a.json --b fixtures/kernel_00_rank1_d3_b.json",
      source_dir());
  REQUIRE(both.exited);
  CHECK(both.exit_code == 0);
  CHECK(both.out.find("\"deviations\": {}") != std::string::npos);
  CHECK(both.out.find("\"epsilon_study\"") != std::string::npos);

  // B alone is singular: the left route (pivot A) still reports.
  const RunResult one = run_cli(
      "compare --fn geometric --alpha 0.5 --a fixtures/infinity_00_bs_d2_a.json "
      "--b fixtures/infinity_00_bs_d2_b.json",
      source_dir());
  REQUIRE(one.exited);
  CHECK(one.exit_code == 0);
  CHECK(one.out.find("\"left\"") != std::string::npos);
  CHECK(one.out.find("\"right\"") == std::string::npos);
  CHECK(one.out.find("\"left_right\"") == std::string::npos);
}

TEST_CASE("precondition failures exit 2") {
  const fs::path dir = fresh_dir("pwcalc_cli_exit2");
  // A Hermitian document that is not PSD.
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  write_matrix_file((dir / "indef.json").string(), "indef", m);
  const std::string spd = "fixtures/invertible_00_spd_d2_a.json";

  const RunResult notpsd = run_cli(
      "compute --fn arithmetic --a " + (dir / "indef.json").string() + " --b " + spd,
      source_dir());
  REQUIRE(notpsd.exited);
  CHECK(notpsd.exit_code == 2);

  // Unknown function name: the request is well-formed JSON-wise but names nothing.
  const RunResult unknown =
      run_cli("compute --fn frobnicate --a " + spd + " --b " + spd, source_dir());
  REQUIRE(unknown.exited);
  CHECK(unknown.exit_code == 2);

  // Singular pivot for a coordinate route.
  const RunResult pivot = run_cli(
      "compute --fn geometric --alpha 0.5 --route left --a "
      "fixtures/kernel_00_rank1_d3_a.json --b fixtures/kernel_00_rank1_d3_b.json",
      source_dir());
  REQUIRE(pivot.exited);
  CHECK(pivot.exit_code == 2);

  // The epsilon limit study demands continuity on the closed quadrant; the
  // plain regularized evaluation does not (it shifts both operands first), so
  // only the study refuses entropy_kernel.
  const RunResult eps = run_cli(
      "compare --fn entropy_kernel --eps-study --a " + spd + " --b " + spd,
      source_dir());
  REQUIRE(eps.exited);
  CHECK(eps.exit_code == 2);
  const RunResult shifted = run_cli(
      "compute --fn entropy_kernel --eps 0.001 0.001 --a " + spd + " --b " + spd,
      source_dir());
  REQUIRE(shifted.exited);
  CHECK(shifted.exit_code == 0);

  // Dimension mismatch between the operands.
  const RunResult dims = run_cli(
      "compute --fn arithmetic --a fixtures/invertible_00_spd_d2_a.json "
      "--b fixtures/invertible_02_spd_d3_b.json",
      source_dir());
  REQUIRE(dims.exited);
  CHECK(dims.exit_code == 2);
}

TEST_CASE("usage and parse failures exit 3") {
  const std::string spd = "fixtures/invertible_00_spd_d2_a.json";
  // Missing required option.
  const RunResult usage = run_cli("compute --fn arithmetic --a " + spd, source_dir());
  REQUIRE(usage.exited);
  CHECK(usage.exit_code == 3);
  // Unknown subcommand.
  const RunResult sub = run_cli("transmogrify", source_dir());
  REQUIRE(sub.exited);
  CHECK(sub.exit_code == 3);
  // Missing operand file.
  const RunResult missing =
      run_cli("compute --fn arithmetic --a /nonexistent.json --b " + spd, source_dir());
  REQUIRE(missing.exited);
  CHECK(missing.exit_code == 3);
  // Flag combinations the tool rejects.
  const RunResult combo = run_cli(
      "compute --fn geometric --alpha 0.5 --route left --extended --a " + spd + " --b " + spd,
      source_dir());
  REQUIRE(combo.exited);
  CHECK(combo.exit_code == 3);
}

TEST_CASE("committed malformed documents exit 3") {
  const fs::path bad_dir = fs::path(source_dir()) / "tests" / "data" / "bad";
  const std::string spd = "fixtures/invertible_00_spd_d2_a.json";
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(bad_dir)) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().filename().string());
    const RunResult r = run_cli(
        "compute --fn arithmetic --a " + entry.path().string() + " --b " + spd, source_dir());
    REQUIRE(r.exited);
    CHECK(r.exit_code == 3);
    ++seen;
  }
  CHECK(seen >= 8);
}

TEST_CASE("mutated documents never crash and always exit 3") {
  // Truncations and byte stomps of a valid document: every strict prefix of a
  // top-level JSON object is invalid, and 0xFF breaks either UTF-8 or syntax.
  const std::string good =
      read_text_file(fixture_dir() + "/invertible_00_spd_d2_a.json");
  const fs::path dir = fresh_dir("pwcalc_cli_fuzz");
  const std::string spd = "fixtures/invertible_00_spd_d2_a.json";
  const std::string mutant = (dir / "mutant.json").string();

  int cases = 0;
  for (size_t cut = 1; cut + 1 < good.size(); cut += good.size() / 17 + 1) {
    write_text_file(mutant, good.substr(0, cut));
    const RunResult r =
        run_cli("compute --fn arithmetic --a " + mutant + " --b " + spd, source_dir());
    REQUIRE(r.exited);
    CHECK(r.exit_code == 3);
    ++cases;
  }
  for (size_t pos = 0; pos < good.size(); pos += good.size() / 13 + 1) {
    std::string stomped = good;
    stomped[pos] = static_cast<char>(0xFF);
    write_text_file(mutant, stomped);
    const RunResult r =
        run_cli("compute --fn arithmetic --a " + mutant + " --b " + spd, source_dir());
    REQUIRE(r.exited);
    CHECK(r.exit_code == 3);
    ++cases;
  }
  CHECK(cases >= 25);
}

TEST_CASE("falsify persists a witness that revalidates") {
  const fs::path dir = fresh_dir("pwcalc_cli_witness");
  const std::string args =
      "convexity --falsify --fn perspective_of --scalar t4 --trials 200 --seed 20260819 "
      "--dims 2 3 4 --witness-dir " + dir.string();
  const RunResult r = run_cli(args, source_dir());
  REQUIRE(r.exited);
  REQUIRE(r.exit_code == 0);
  CHECK(fs::exists(dir / "witness_a.json"));
  CHECK(fs::exists(dir / "witness_b.json"));
  CHECK(fs::exists(dir / "witness_v.json"));

  const RunResult again = run_cli(
      "convexity --fn perspective_of --scalar t4 --a " + (dir / "witness_a.json").string() +
          " --b " + (dir / "witness_b.json").string() + " --v " +
          (dir / "witness_v.json").string(),
      source_dir());
  REQUIRE(again.exited);
  CHECK(again.exit_code == 0);
  CHECK(again.out.find("\"passed\": false") != std::string::npos);
}
