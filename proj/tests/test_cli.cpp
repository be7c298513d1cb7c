#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

#include "halfpow/decomposition.hpp"
#include "halfpow/render.hpp"

using namespace halfpow;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command =
      std::string(HALFPOW_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer{};
  while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) {
    result.output += buffer.data();
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("coeffs: plain output matches the published form") {
  const RunResult r = run_cli("coeffs --k 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "P_3(n) = 2/5 n^2 + 1/2 n + 1/8 ; A_5 = 1/40\n");
}

TEST_CASE("coeffs: json output and round-trip") {
  const RunResult r = run_cli("coeffs --k 1 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "{\"k\":1,\"P\":[[1,2],[2,3]],\"A\":{\"3\":[1,6]}}\n");

  for (long k : {1L, 5L, 13L, 21L}) {
    const Decomposition original = decomposition(k);
    const auto parsed =
        decomposition_from_json(nlohmann::json::parse(to_json(original).dump()));
    CHECK(same_coefficients(original, parsed));
  }
}

TEST_CASE("coeffs: latex output carries the display shape") {
  const RunResult r = run_cli("coeffs --k 1 --format latex");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "\\sum_{i=1}^{n} i^{1/2} = C_{1} + \\frac{2}{3} n^{3/2} + "
        "\\frac{1}{2} n^{1/2} + \\frac{1}{6} \\tau(n,3)\n");
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("coeffs --k 2").exit_code == 2);
  CHECK(run_cli("coeffs --k -5").exit_code == 2);
  CHECK(run_cli("constant").exit_code == 2);
  CHECK(run_cli("identities --order 2").exit_code == 2);
  CHECK(run_cli("table --k 9 --k 10").exit_code == 2);
  CHECK(run_cli("coeffs --k 3 --format yaml").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("table rows reproduce the published values") {
  const RunResult r = run_cli("table");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("9 | 0, 1/256, 0, -1/512, 0, 1/5632\n") !=
        std::string::npos);
  CHECK(r.output.find("13 | 0, -143/40960, 0, 221/122880, 0, -5/24576, 0, "
                      "1/122880\n") != std::string::npos);
  const RunResult single = run_cli("table --k 1");
  CHECK(single.output.find("1 | 0, 1/6\n") != std::string::npos);
}

TEST_CASE("table latex format emits tabular rows") {
  const RunResult r = run_cli("table --k 9 --format latex");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\\begin{tabular}") != std::string::npos);
  CHECK(r.output.find("9 & $0$, $\\frac{1}{256}$, $0$, $-\\frac{1}{512}$, "
                      "$0$, $\\frac{1}{5632}$") != std::string::npos);
}

TEST_CASE("latex handles negative coefficients") {
  const RunResult r = run_cli("coeffs --k 7 --format latex");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("- \\frac{7}{384} n^{1/2}") != std::string::npos);
  CHECK(r.output.find("- \\frac{1}{192} \\tau(n,5)") != std::string::npos);
  CHECK(r.output.find("+ \\frac{1}{1152} \\tau(n,9)") != std::string::npos);
}

TEST_CASE("constant command") {
  const RunResult r = run_cli("constant --k 1 --prec 128 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("k") == 1);
  CHECK(j.at("C").at("precision_bits") == 128);
  CHECK(j.at("n0_consistent") == true);
  const double value = std::stod(j.at("C").at("value").get<std::string>());
  CHECK(value < 0.0);
  CHECK(value > -1.0);
}

TEST_CASE("verify command: pass, fail-fast tolerances, exit codes") {
  const RunResult ok =
      run_cli("verify --k 5 --n-max 4 --prec 192 --tol 1e-25 --format json");
  CHECK(ok.exit_code == 0);
  // one JSON record per grid cell
  int lines = 0;
  for (char c : ok.output) lines += c == '\n';
  CHECK(lines == 4);
  const auto first = nlohmann::json::parse(
      ok.output.substr(0, ok.output.find('\n')));
  CHECK(first.at("pass") == true);
  CHECK(first.at("k") == 5);

  const RunResult impossible =
      run_cli("verify --k 1 --n-max 1 --prec 64 --tol 1e-999");
  CHECK(impossible.exit_code == 3);
}

TEST_CASE("identities command runs the suite") {
  const RunResult r = run_cli("identities --order 12 --k-max 9");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS bernoulli.recurrence") != std::string::npos);
  CHECK(r.output.find("PASS chebyshev.telescoping") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("identities json output is newline-delimited records") {
  const RunResult r = run_cli("identities --order 6 --k-max 5 --format json");
  CHECK(r.exit_code == 0);
  const auto first =
      nlohmann::json::parse(r.output.substr(0, r.output.find('\n')));
  CHECK(first.at("name") == "bernoulli.recurrence");
  CHECK(first.at("pass") == true);
}

TEST_CASE("environment variable sets the default precision") {
  const std::string command = std::string("HALFPOW_PREC=96 ") +
                              HALFPOW_CLI_PATH +
                              " constant --k 1 --format json 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer{};
  while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) {
    output += buffer.data();
  }
  pclose(pipe);
  const auto j = nlohmann::json::parse(output);
  CHECK(j.at("C").at("precision_bits") == 96);
}
