#include "halfpow/render.hpp"

#include <sstream>

namespace halfpow {

namespace {

nlohmann::ordered_json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) {
    return nlohmann::ordered_json(z.get_si());
  }
  return nlohmann::ordered_json(z.get_str());
}

nlohmann::ordered_json rational_to_json(const Rational& q) {
  return nlohmann::ordered_json::array(
      {integer_to_json(q.numerator()), integer_to_json(q.denominator())});
}

mpz_class integer_from_json(const nlohmann::json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  return mpz_class(static_cast<long>(j.get<std::int64_t>()));
}

Rational rational_from_json(const nlohmann::json& j) {
  return Rational(integer_from_json(j.at(0)), integer_from_json(j.at(1)));
}

std::string latex_magnitude(const Rational& q) {
  const Rational mag = q.abs();
  if (mag.is_integer()) return mag.to_string();
  return "\\frac{" + mag.numerator().get_str() + "}{" +
         mag.denominator().get_str() + "}";
}

std::string latex_rational(const Rational& q) {
  return (q.sign() < 0 ? "-" : "") + latex_magnitude(q);
}

}  // namespace

std::optional<OutputFormat> parse_format(const std::string& name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "latex") return OutputFormat::latex;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

std::string render_plain(const Decomposition& d) {
  std::ostringstream out;
  out << "P_" << d.k << "(n) = " << d.poly_part.to_string();
  for (const auto& [i, a] : d.tau_coeffs) {
    if (a.is_zero()) continue;
    out << " ; A_" << i << " = " << a.to_string();
  }
  return out.str();
}

std::string render_latex(const Decomposition& d) {
  std::ostringstream out;
  out << "\\sum_{i=1}^{n} i^{" << d.k << "/2} = C_{" << d.k << "}";
  const auto& coeffs = d.poly_part.coeffs();
  for (std::size_t idx = coeffs.size(); idx-- > 0;) {
    const Rational& c = coeffs[idx];
    if (c.is_zero()) continue;
    out << (c.sign() < 0 ? " - " : " + ") << latex_magnitude(c) << " n^{"
        << (2 * idx + 1) << "/2}";
  }
  for (const auto& [i, a] : d.tau_coeffs) {
    if (a.is_zero()) continue;
    out << (a.sign() < 0 ? " - " : " + ") << latex_magnitude(a) << " \\tau(n,"
        << i << ")";
  }
  return out.str();
}

nlohmann::ordered_json to_json(const Decomposition& d,
                               const std::optional<ConstantRecord>& constant) {
  nlohmann::ordered_json j;
  j["k"] = d.k;
  nlohmann::ordered_json poly = nlohmann::ordered_json::array();
  for (const Rational& c : d.poly_part.coeffs()) {
    poly.push_back(rational_to_json(c));
  }
  j["P"] = std::move(poly);
  nlohmann::ordered_json tau_coeffs = nlohmann::ordered_json::object();
  for (const auto& [i, a] : d.tau_coeffs) {
    if (a.is_zero()) continue;
    tau_coeffs[std::to_string(i)] = rational_to_json(a);
  }
  j["A"] = std::move(tau_coeffs);
  if (constant) {
    j["C"] = {{"value", constant->value},
              {"err", constant->err},
              {"precision_bits", constant->precision_bits}};
  }
  return j;
}

Decomposition decomposition_from_json(const nlohmann::json& j) {
  Decomposition d;
  d.k = j.at("k").get<long>();
  std::vector<Rational> coeffs;
  for (const auto& pair : j.at("P")) coeffs.push_back(rational_from_json(pair));
  d.poly_part = PolyQ(std::move(coeffs));
  for (long i = 1; i <= d.k + 2; i += 2) d.tau_coeffs[i] = Rational(0);
  for (const auto& [key, pair] : j.at("A").items()) {
    d.tau_coeffs[std::stol(key)] = rational_from_json(pair);
  }
  d.route = Route::direct;
  return d;
}

bool same_coefficients(const Decomposition& a, const Decomposition& b) {
  return a.k == b.k && a.poly_part == b.poly_part &&
         a.tau_coeffs == b.tau_coeffs;
}

std::string render_table_plain(const std::vector<Decomposition>& rows) {
  std::ostringstream out;
  out << "k | A_1, A_3, ..., A_{k+2}\n";
  for (const Decomposition& d : rows) {
    out << d.k << " | ";
    bool first = true;
    for (const auto& [i, a] : d.tau_coeffs) {
      if (!first) out << ", ";
      out << a.to_string();
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

std::string render_table_latex(const std::vector<Decomposition>& rows) {
  std::ostringstream out;
  out << "\\begin{tabular}{r|l}\n";
  out << "$k$ & $A^k_1,\\ A^k_3,\\ \\dots,\\ A^k_{k+2}$ \\\\\n\\hline\n";
  for (const Decomposition& d : rows) {
    out << d.k << " & ";
    bool first = true;
    for (const auto& [i, a] : d.tau_coeffs) {
      if (!first) out << ", ";
      out << "$" << latex_rational(a) << "$";
      first = false;
    }
    out << " \\\\\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

}  // namespace halfpow
