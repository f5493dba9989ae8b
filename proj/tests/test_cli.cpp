#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mcp1d/serde.hpp"

namespace {

// Runs the CLI with the given arguments, capturing stdout into out_path.
int run_cli(const std::string& args, const std::string& out_path = "") {
  std::string cmd = std::string(MCP1D_CLI_PATH) + " " + args;
  if (!out_path.empty()) cmd += " > " + out_path;
  cmd += " 2> cli_stderr.txt";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<double> csv_row_values(const std::string& line) {
  std::vector<double> vals;
  std::istringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) vals.push_back(std::stod(field));
  return vals;
}

}  // namespace

TEST_CASE("profile table") {
  CHECK(run_cli("profile --K 0 --N 2 --D 1 --v-log 1e-6:0.5:20 --out cli_profile.csv") == 0);
  const auto lines = read_lines("cli_profile.csv");
  REQUIRE(lines.size() == 21);
  CHECK(lines[0] == "K,N,D,v,a,I,I_asym,ratio");
  const auto first = csv_row_values(lines[1]);
  const auto last = csv_row_values(lines[20]);
  REQUIRE(first.size() == 8);
  CHECK(first[3] == doctest::Approx(1e-6).epsilon(1e-12));
  CHECK(last[3] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(last[5] == doctest::Approx(2.0 / 3.0).epsilon(1e-9));  // I at v = 1/2

  CHECK(run_cli("profile --K 0 --N 2 --D 1 --v 0.5 --format json --out cli_profile.json") == 0);
  const mcp1d::json j =
      mcp1d::json::parse(mcp1d::read_text_file("cli_profile.json"));
  REQUIRE(j.is_array());
  CHECK(j[0]["I"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("density certificates") {
  CHECK(run_cli("density-check --K 1 --N 2 --D 3 --constant --out cli_const.json") == 1);
  const mcp1d::json bad = mcp1d::json::parse(mcp1d::read_text_file("cli_const.json"));
  CHECK_FALSE(bad["pass"].get<bool>());
  CHECK(bad["violation_count"].get<std::size_t>() >= 1);
  CHECK(bad["worst_margin"].get<double>() <= -6.0);

  CHECK(run_cli("density-check --K 0 --N 2 --D 1 --model-a 0.3 --grid-n 25 "
                "--out cli_model.json") == 0);
  const mcp1d::json good = mcp1d::json::parse(mcp1d::read_text_file("cli_model.json"));
  CHECK(good["pass"].get<bool>());
  CHECK(good["violation_count"].get<std::size_t>() == 0);
}

TEST_CASE("sharpness sweep") {
  CHECK(run_cli("sharpness --K 0 --N 2 --D 1 --a-log 1e-2:1e-4:3 --out cli_sharp.csv") == 0);
  const auto lines = read_lines("cli_sharp.csv");
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "K,N,D,a,v,content,bound,ratio");
  const double r0 = csv_row_values(lines[1]).back();
  const double r1 = csv_row_values(lines[2]).back();
  const double r2 = csv_row_values(lines[3]).back();
  CHECK(r0 > r1);
  CHECK(r1 > r2);
  CHECK(r2 >= 1.0);
  CHECK(r2 <= 1.02);
}

TEST_CASE("verification report") {
  CHECK(run_cli("verify --K 0 --N 2 --D 1 --delta 0.05 --needles 3 --trials 4 "
                "--seed 5 --optimal --psi-band 0.05 --out cli_verify.json") == 0);
  const mcp1d::json j = mcp1d::json::parse(mcp1d::read_text_file("cli_verify.json"));
  CHECK(j["all_pass"].get<bool>());
  REQUIRE(j.contains("localized_trials"));
  REQUIRE(j["localized_trials"].size() == 4);
  for (const auto& trial : j["localized_trials"]) {
    CHECK(trial.contains("lhs"));
    CHECK(trial.contains("rhs"));
    CHECK(trial["slack"].get<double>() >= -1e-8);
    CHECK(trial["pass"].get<bool>());
  }
  CHECK(j["optimal"]["tight"].get<bool>());
  CHECK(j["theorem"]["pass"].get<bool>());
  CHECK(j["theorem"]["psi_eff"].is_number());
  CHECK(j["theorem"]["assumptions"].contains("ball_mass"));
}

TEST_CASE("verify a stored decomposition") {
  {
    const mcp1d::CurvatureParams p(0.0, 2.0, 1.0);
    const mcp1d::NeedleDecomposition dec =
        mcp1d::random_decomposition(p, 0.1, 3, 21);
    mcp1d::write_text_file("cli_dec.json", mcp1d::to_json(dec).dump(2));
  }
  CHECK(run_cli("verify --K 0 --N 2 --D 1 --delta 0.1 --in cli_dec.json "
                "--out cli_dec_report.json") == 0);
  const mcp1d::json j =
      mcp1d::json::parse(mcp1d::read_text_file("cli_dec_report.json"));
  CHECK(j["localized"]["pass"].get<bool>());
}

TEST_CASE("brute-force oracle") {
  CHECK(run_cli("oracle --K 0 --N 2 --D 1 --v 0.3 --grid-n 128 --out cli_oracle.csv") == 0);
  const auto lines = read_lines("cli_oracle.csv");
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "K,N,D,v,I,I_brute,rel_err,E_l,E_r");
  const auto row = csv_row_values(lines[1]);
  CHECK(row[6] <= 1e-3);
}

TEST_CASE("exit code contract") {
  CHECK(run_cli("--help", "cli_help.txt") == 0);
  CHECK(run_cli("profile --help", "cli_help.txt") == 0);
  // Malformed flags and invalid configurations exit 2.
  CHECK(run_cli("profile --K 0 --N 2 --D 1") == 2);              // no grid
  CHECK(run_cli("profile --K 0 --N 2 --D 1 --v-log nonsense") == 2);
  CHECK(run_cli("profile --K 0 --N 2 --v 0.5") == 2);            // missing required
  CHECK(run_cli("profile --K 0 --N 2 --D 1 --v 0.5 --format xml") == 2);
  CHECK(run_cli("profile --K 0 --N 2 --D -1 --v 0.5") == 2);     // invalid domain
  CHECK(run_cli("profile --K 0 --N 2 --D 1 --v 0.5 --unknown-flag 1") == 2);
  CHECK(run_cli("density-check --K 0 --N 2 --D 1") == 2);        // no density source
  CHECK(run_cli("density-check --K 0 --N 2 --D 1 --constant --model-a 0.5") == 2);
  CHECK(run_cli("density-check --K 0 --N 2 --D 1 --constant --format csv") == 2);
  CHECK(run_cli("verify --K 0 --N 2 --D 1") == 2);               // missing delta
  CHECK(run_cli("nonsense-subcommand") == 2);
  // Assertion failures exit 1 (the positive-curvature constant density).
  CHECK(run_cli("density-check --K 1 --N 2 --D 3 --constant", "cli_tmp.json") == 1);
}

TEST_CASE("byte determinism") {
  const std::string flags =
      "verify --K 0 --N 2 --D 1 --delta 0.05 --needles 4 --trials 6 --seed 42 "
      "--optimal --out ";
  CHECK(run_cli(flags + "cli_det_a.json") == 0);
  CHECK(run_cli(flags + "cli_det_b.json") == 0);
  CHECK(mcp1d::read_text_file("cli_det_a.json") ==
        mcp1d::read_text_file("cli_det_b.json"));

  const std::string prof = "profile --K -1 --N 2.5 --D 1.3 --v-log 1e-4:0.9:12 --out ";
  CHECK(run_cli(prof + "cli_det_c.csv") == 0);
  CHECK(run_cli(prof + "cli_det_d.csv") == 0);
  CHECK(mcp1d::read_text_file("cli_det_c.csv") ==
        mcp1d::read_text_file("cli_det_d.csv"));

  // Stdout and --out produce the same bytes.
  CHECK(run_cli("profile --K 0 --N 2 --D 1 --v 0.25,0.5", "cli_stdout.csv") == 0);
  CHECK(run_cli("profile --K 0 --N 2 --D 1 --v 0.25,0.5 --out cli_file.csv") == 0);
  CHECK(mcp1d::read_text_file("cli_stdout.csv") ==
        mcp1d::read_text_file("cli_file.csv"));
}
