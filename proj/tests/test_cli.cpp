#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef ALCOVE_BETHE_CLI
#error "ALCOVE_BETHE_CLI must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + ALCOVE_BETHE_CLI + " " +
                    args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (char c : line) {
      if (c == '"') {
        quoted = !quoted;
      } else if (c == ',' && !quoted) {
        fields.push_back(field);
        field.clear();
      } else {
        field.push_back(c);
      }
    }
    fields.push_back(field);
    rows.push_back(std::move(fields));
  }
  return rows;
}

}  // namespace

TEST_CASE("cli: spectrum emits the n=2, m=3, t=0 eigenvalues") {
  RunResult r = run_cli("spectrum --n 2 --m 3 --t 0");
  CHECK(r.exit_code == 0);
  nlohmann::json report = nlohmann::json::parse(r.out);
  CHECK(report["dim"] == 4);
  std::vector<double> evs;
  for (const auto& pair : report["spectra"]["1"])
    evs.push_back(pair[0].get<double>());
  std::sort(evs.begin(), evs.end());
  std::vector<double> expected;
  for (int j = 4; j >= 1; --j)
    expected.push_back(2.0 * std::cos(M_PI * j / 5.0));
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(std::abs(evs[i] - expected[i]) < 1e-10);
}

TEST_CASE("cli: spectrum writes a report file") {
  std::string path = "/tmp/alcove_bethe_spectrum_test.json";
  std::remove(path.c_str());
  RunResult r = run_cli("spectrum --n 3 --m 2 --t 0.5 --format json -o " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  nlohmann::json report = nlohmann::json::parse(in);
  CHECK(report["dim"] == 6);
  std::remove(path.c_str());
}

TEST_CASE("cli: configuration errors exit with code 1") {
  CHECK(run_cli("spectrum --n 2 --m 3").exit_code == 1);       // missing --t
  CHECK(run_cli("verify --n 2 --m 1 --t 1.5").exit_code == 1);  // bad regime
  CHECK(run_cli("continuum --n 2 --g 1 --mu 0 --m-list \"\"").exit_code == 1);
  CHECK(run_cli("continuum --n 2 --g 1 --mu 0 --m-list 16,8").exit_code == 1);
  CHECK(run_cli("continuum --n 2 --g -1 --mu 0 --m-list 8").exit_code == 1);
  CHECK(run_cli("continuum --n 2 --g 1 --mu 9 --m-list 8").exit_code == 1);
  CHECK(run_cli("bethe --n 3 --m 2 --t 0.5 --mu 1").exit_code == 1);
}

TEST_CASE("cli: verify passes across couplings") {
  CHECK(run_cli("verify --n 2 --m 4 --t -0.5").exit_code == 0);
  CHECK(run_cli("verify --n 4 --m 3 --t 0.9").exit_code == 0);
}

TEST_CASE("cli: continuum sweep emits a strictly decreasing error column") {
  RunResult r = run_cli("continuum --n 2 --g 1 --mu 0 --m-list 8,16,32,64");
  CHECK(r.exit_code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0][0] == "n");
  double prev = 1e300;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double err = std::stod(rows[i][5]);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("cli: bethe solves a single labeled state") {
  RunResult r = run_cli("bethe --n 3 --m 2 --t 0.5 --mu 1,0");
  CHECK(r.exit_code == 0);
  nlohmann::json list = nlohmann::json::parse(r.out);
  REQUIRE(list.size() == 1);
  CHECK(list[0]["mu"] == nlohmann::json::array({1, 0}));
  CHECK(list[0]["residual"].get<double>() <= 1e-12);
}

TEST_CASE("cli: reports are byte-stable across runs and thread caps") {
  RunResult a = run_cli("spectrum --n 3 --m 3 --t 0.4");
  RunResult b = run_cli("spectrum --n 3 --m 3 --t 0.4");
  CHECK(a.out == b.out);
  RunResult c = run_cli("spectrum --n 3 --m 3 --t 0.4",
                        "ALCOVE_BETHE_THREADS=1");
  CHECK(a.out == c.out);

  RunResult v1 = run_cli("verify --n 3 --m 2 --t 0.6 --seed 99");
  RunResult v2 = run_cli("verify --n 3 --m 2 --t 0.6 --seed 99");
  CHECK(v1.out == v2.out);
}
