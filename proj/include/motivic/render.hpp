#pragma once

// Output forms shared by the CLI and the tests.
//
//   class-json   {"genus": g, "terms": [{"mono": [b...], "coeffs": [c0, c1, ...]}]}
//   diamond-json {"genus": g, "rows_are_p": true, "matrix": [[h^{0,0}, h^{0,1}, ...], ...]}
//   Integers outside the signed 64-bit range are written as decimal strings.
//   diamond-text one row per p, space-separated h^{p,q} for ascending q
//   poincare     ascending polynomial in t

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "motivic/motive.hpp"
#include "motivic/polyring.hpp"

namespace motivic {

enum class OutputFormat { ClassJson, Poincare, DiamondText, DiamondJson };

inline std::optional<OutputFormat> parse_output_format(std::string_view s) {
  if (s == "class-json") return OutputFormat::ClassJson;
  if (s == "poincare") return OutputFormat::Poincare;
  if (s == "diamond-text") return OutputFormat::DiamondText;
  if (s == "diamond-json") return OutputFormat::DiamondJson;
  return std::nullopt;
}

/// Square array of Hodge numbers, rows indexed by p, columns by q.
struct HodgeMatrix {
  std::vector<std::vector<Integer>> rows;

  static HodgeMatrix from(const BiPoly& h) {
    const int n = std::max(h.max_p(), h.max_q()) + 1;
    HodgeMatrix out;
    out.rows.assign(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n)));
    for (const auto& [k, c] : h.terms())
      out.rows[static_cast<std::size_t>(k.first)][static_cast<std::size_t>(k.second)] = c;
    return out;
  }

  std::size_t size() const { return rows.size(); }
  const Integer& at(std::size_t p, std::size_t q) const { return rows.at(p).at(q); }

  friend bool operator==(const HodgeMatrix&, const HodgeMatrix&) = default;
};

namespace detail {

// nlohmann stores numbers in 64 bits, so wider values go out as decimal strings.
inline nlohmann::ordered_json integer_to_json(const Integer& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return static_cast<long long>(c);
  return c.str();
}

template <class Json>
Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer(j.template get<std::string>());
  if (!j.is_number_integer()) throw InvalidArgument("expected an integer, got " + j.dump());
  return Integer(j.dump());
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const MotiveClass& m) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [mono, poly] : m.terms()) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& c : poly.coeffs()) coeffs.push_back(detail::integer_to_json(c));
    terms.push_back({{"mono", mono.indices()}, {"coeffs", std::move(coeffs)}});
  }
  return {{"genus", m.genus()}, {"terms", std::move(terms)}};
}

template <class Json>
MotiveClass class_from_json(const Json& j) {
  const int g = j.at("genus").template get<int>();
  std::vector<std::pair<std::vector<int>, IntPoly>> raw;
  for (const auto& t : j.at("terms")) {
    std::vector<Integer> coeffs;
    for (const auto& c : t.at("coeffs")) coeffs.push_back(detail::integer_from_json(c));
    raw.emplace_back(t.at("mono").template get<std::vector<int>>(), IntPoly(std::move(coeffs)));
  }
  return MotiveClass::reduce(g, raw);
}

inline nlohmann::ordered_json to_json(const HodgeMatrix& h, int genus) {
  nlohmann::ordered_json matrix = nlohmann::ordered_json::array();
  for (const auto& row : h.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& c : row) r.push_back(detail::integer_to_json(c));
    matrix.push_back(std::move(r));
  }
  return {{"genus", genus}, {"rows_are_p", true}, {"matrix", std::move(matrix)}};
}

inline std::string to_text(const HodgeMatrix& h) {
  std::ostringstream os;
  for (const auto& row : h.rows) {
    for (std::size_t q = 0; q < row.size(); ++q) os << (q ? " " : "") << row[q];
    os << "\n";
  }
  return os.str();
}

/// Parses diamond-text back into a matrix; rows must be equal length.
inline HodgeMatrix parse_diamond_text(std::string_view text) {
  HodgeMatrix out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<Integer> row;
    std::string tok;
    while (ls >> tok) row.emplace_back(tok);
    out.rows.push_back(std::move(row));
  }
  for (const auto& r : out.rows)
    if (r.size() != out.rows.size()) throw InvalidArgument("diamond text is not square");
  return out;
}

inline std::string render(const MotiveClass& m, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::ClassJson: return to_json(m).dump() + "\n";
    case OutputFormat::Poincare: return to_string(poincare(m), "t") + "\n";
    case OutputFormat::DiamondText: return to_text(HodgeMatrix::from(hodge_realize(m)));
    case OutputFormat::DiamondJson: return to_json(HodgeMatrix::from(hodge_realize(m)), m.genus()).dump() + "\n";
  }
  return {};
}

}  // namespace motivic
