#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "halfpow/decomposition.hpp"

namespace halfpow {

enum class OutputFormat { plain, latex, json };

std::optional<OutputFormat> parse_format(const std::string& name);

struct ConstantRecord {
  std::string value;
  std::string err;
  long precision_bits = 0;
};

// "P_3(n) = 2/5 n^2 + 1/2 n + 1/8 ; A_5 = 1/40"
std::string render_plain(const Decomposition& d);

// Display form of the identity: constant, then the polynomial part expanded
// into descending half-integer powers of n, then tau terms ascending in i.
std::string render_latex(const Decomposition& d);

// {"k":1, "P":[[1,2],[2,3]], "A":{"3":[1,6]}} with P ascending by power and
// only nonzero tau coefficients listed. Components exceeding 64-bit range
// are emitted as decimal strings.
nlohmann::ordered_json to_json(
    const Decomposition& d,
    const std::optional<ConstantRecord>& constant = std::nullopt);

Decomposition decomposition_from_json(const nlohmann::json& j);

// Mathematical content comparison; the computation route is not part of it.
bool same_coefficients(const Decomposition& a, const Decomposition& b);

// One line per level: "9 | 0, 1/256, 0, -1/512, 0, 1/5632".
std::string render_table_plain(const std::vector<Decomposition>& rows);
std::string render_table_latex(const std::vector<Decomposition>& rows);

}  // namespace halfpow
