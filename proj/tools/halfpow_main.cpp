#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "halfpow/decomposition.hpp"
#include "halfpow/errors.hpp"
#include "halfpow/identity_eval.hpp"
#include "halfpow/identity_suite.hpp"
#include "halfpow/render.hpp"
#include "halfpow/tau.hpp"

namespace {

using namespace halfpow;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConvergence = 3;

long default_precision() {
  if (const char* env = std::getenv("HALFPOW_PREC")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 8 && parsed <= 1 << 20) {
      return parsed;
    }
    std::cerr << "warning: ignoring invalid HALFPOW_PREC='" << env << "'\n";
  }
  return 256;
}

bool odd_positive(long k) { return k >= 1 && k % 2 == 1; }

std::size_t decimal_digits(long prec) {
  return static_cast<std::size_t>(static_cast<double>(prec) * 0.30103) + 3;
}

int run_coeffs(long k, const std::string& format) {
  const Decomposition d = decomposition(k);
  const OutputFormat fmt = *parse_format(format);
  switch (fmt) {
    case OutputFormat::plain:
      std::cout << render_plain(d) << "\n";
      break;
    case OutputFormat::latex:
      std::cout << render_latex(d) << "\n";
      break;
    case OutputFormat::json:
      std::cout << to_json(d).dump() << "\n";
      break;
  }
  return kExitOk;
}

int run_table(const std::vector<long>& ks, const std::string& format) {
  std::vector<Decomposition> rows;
  rows.reserve(ks.size());
  for (long k : ks) rows.push_back(decomposition(k));
  const OutputFormat fmt = *parse_format(format);
  switch (fmt) {
    case OutputFormat::plain:
      std::cout << render_table_plain(rows);
      break;
    case OutputFormat::latex:
      std::cout << render_table_latex(rows);
      break;
    case OutputFormat::json:
      for (const Decomposition& d : rows) {
        std::cout << to_json(d).dump() << "\n";
      }
      break;
  }
  return kExitOk;
}

int run_constant(long k, long prec, const std::string& format) {
  const DecompositionEvaluator eval(k, prec);
  const ApproxReal& c = eval.constant();

  // Consistency at n = 0: the empty sum forces C_k = -sum_i A_i tau(0, i).
  const BigFloat tau_target = BigFloat::pow2(4 - prec);
  const ApproxReal zero_residual = c + eval.tau_sum(0, tau_target);
  const bool consistent = zero_residual.contains_zero();

  const std::size_t digits = decimal_digits(prec);
  if (*parse_format(format) == OutputFormat::json) {
    ConstantRecord record{c.value().to_decimal(digits),
                          c.error().to_decimal(3), prec};
    nlohmann::ordered_json j = to_json(eval.decomposition(), record);
    j["n0_consistent"] = consistent;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "C_" << k << " = " << c.value().to_decimal(digits) << " +/- "
              << c.error().to_decimal(3) << "  (" << prec << "-bit)\n";
    std::cout << "n0-consistency: " << (consistent ? "pass" : "FAIL") << "\n";
  }
  return consistent ? kExitOk : kExitCheckFailed;
}

int run_verify(const std::vector<long>& ks, long n_max, long prec,
               const std::string& tol_text, const std::string& format) {
  const BigFloat tol = BigFloat::parse_decimal(tol_text, 96);
  if (tol.sign() <= 0) {
    std::cerr << "error: --tol must be positive\n";
    return kExitUsage;
  }
  const bool as_json = *parse_format(format) == OutputFormat::json;
  bool all_pass = true;
  for (long k : ks) {
    const DecompositionEvaluator eval(k, prec);
    for (long n = 1; n <= n_max; ++n) {
      const VerifyResult result = eval.verify(n, tol);
      const BigFloat residual_mag = result.residual.abs_upper();
      const bool within_tol = residual_mag <= tol;
      const bool ok = result.pass && within_tol;
      all_pass = all_pass && ok;
      if (as_json) {
        nlohmann::ordered_json j;
        j["k"] = k;
        j["n"] = n;
        j["residual"] = result.residual.value().to_decimal(6);
        j["err"] = result.residual.error().to_decimal(3);
        j["pass"] = ok;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "k=" << k << " n=" << n
                  << " residual=" << result.residual.value().to_decimal(6)
                  << " err=" << result.residual.error().to_decimal(3) << " "
                  << (ok ? "pass" : "FAIL") << "\n";
      }
    }
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

int run_identities(long order, long k_max, const std::string& format) {
  IdentitySuiteOptions options;
  options.order = static_cast<std::size_t>(order);
  options.k_max = k_max;
  const std::vector<CheckResult> results = run_identity_suite(options);
  const bool as_json = *parse_format(format) == OutputFormat::json;
  bool all_pass = true;
  for (const CheckResult& r : results) {
    all_pass = all_pass && r.pass;
    if (as_json) {
      nlohmann::ordered_json j;
      j["name"] = r.name;
      j["pass"] = r.pass;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "\n";
    }
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "halfpow: exact coefficients and high-precision verification for "
      "half-integer power sums"};
  app.require_subcommand(1);
  const long prec_default = default_precision();

  std::string format = "plain";
  long k = 0, n_max = 20, prec = prec_default, order = 30, k_max = 31;
  long verify_k_max = 15;
  std::vector<long> k_list;
  std::string tol_text = "1e-30";

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: plain|latex|json")
        ->check(CLI::IsMember({"plain", "latex", "json"}));
  };

  CLI::App* coeffs = app.add_subcommand(
      "coeffs", "polynomial part and tau coefficients for one odd k");
  coeffs->add_option("--k", k, "odd positive level")->required();
  add_format(coeffs);

  CLI::App* table = app.add_subcommand(
      "table", "tau coefficient table for a list of odd k");
  table->add_option("--k", k_list, "odd positive levels")
      ->expected(-1);
  add_format(table);

  CLI::App* constant = app.add_subcommand(
      "constant", "the additive constant of the decomposition");
  constant->add_option("--k", k, "odd positive level")->required();
  constant->add_option("--prec", prec, "working precision in bits");
  add_format(constant);

  CLI::App* verify = app.add_subcommand(
      "verify", "check both sides of the identity over a grid");
  verify->add_option("--k", k, "single odd level (otherwise all <= --k-max)");
  verify->add_option("--k-max", verify_k_max, "largest odd level");
  verify->add_option("--n-max", n_max, "grid upper bound for n");
  verify->add_option("--prec", prec, "working precision in bits");
  verify->add_option("--tol", tol_text, "absolute residual tolerance");
  add_format(verify);

  CLI::App* identities = app.add_subcommand(
      "identities", "run the exact identity and property suite");
  identities->add_option("--order", order, "series truncation order");
  identities->add_option("--k-max", k_max, "largest odd level");
  add_format(identities);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (coeffs->parsed()) {
      if (!odd_positive(k)) {
        std::cerr << "error: --k must be an odd positive integer\n";
        return kExitUsage;
      }
      return run_coeffs(k, format);
    }
    if (table->parsed()) {
      if (k_list.empty()) k_list = {9, 11, 13, 15};
      for (long kk : k_list) {
        if (!odd_positive(kk)) {
          std::cerr << "error: every --k must be an odd positive integer\n";
          return kExitUsage;
        }
      }
      return run_table(k_list, format);
    }
    if (constant->parsed()) {
      if (!odd_positive(k)) {
        std::cerr << "error: --k must be an odd positive integer\n";
        return kExitUsage;
      }
      if (prec < 8) {
        std::cerr << "error: --prec must be at least 8 bits\n";
        return kExitUsage;
      }
      return run_constant(k, prec, format);
    }
    if (verify->parsed()) {
      std::vector<long> ks;
      if (verify->count("--k") > 0) {
        if (!odd_positive(k)) {
          std::cerr << "error: --k must be an odd positive integer\n";
          return kExitUsage;
        }
        ks.push_back(k);
      } else {
        if (verify_k_max < 1) {
          std::cerr << "error: --k-max must be a positive integer\n";
          return kExitUsage;
        }
        for (long kk = 1; kk <= verify_k_max; kk += 2) ks.push_back(kk);
      }
      if (n_max < 1 || prec < 8) {
        std::cerr << "error: --n-max must be >= 1 and --prec >= 8\n";
        return kExitUsage;
      }
      return run_verify(ks, n_max, prec, tol_text, format);
    }
    if (identities->parsed()) {
      if (order < 4) {
        std::cerr << "error: --order must be at least 4\n";
        return kExitUsage;
      }
      if (k_max < 1) {
        std::cerr << "error: --k-max must be positive\n";
        return kExitUsage;
      }
      return run_identities(order, k_max, format);
    }
  } catch (const ConvergenceParameters& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const InvalidK& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidM& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
