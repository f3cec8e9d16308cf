#pragma once

#include <array>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "molfan/error.hpp"
#include "molfan/lp.hpp"
#include "molfan/polytope.hpp"

namespace molfan {

/// JSON problem file:
///
///     {"A": [[a11, a12], ...], "b": [b1, ...], "objectives": [[c1, c2], ...], "nonneg": true}
///
/// "objectives" defaults to [] and "nonneg" to true. Other keys are ignored.
struct ProblemFile
{
  std::vector<std::array<double, 2>> A;
  std::vector<double> b;
  std::vector<std::array<double, 2>> objectives;
  bool nonneg{true};

  friend bool operator==(const ProblemFile &, const ProblemFile &) = default;

  HalfspaceSystem system() const
  {
    std::vector<Halfspace> rows;
    rows.reserve(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) { rows.push_back({A[i][0], A[i][1], b[i]}); }
    return HalfspaceSystem(std::move(rows), nonneg);
  }

  /// Throws ZeroForm for a zero objective; parsing accepts them.
  std::vector<LinearForm> forms() const
  {
    std::vector<LinearForm> out;
    out.reserve(objectives.size());
    for (const auto & c : objectives) { out.emplace_back(c[0], c[1]); }
    return out;
  }
};

namespace detail {

[[noreturn]] inline void schema_error(const std::string & where, const std::string & what)
{
  throw Error(ErrorCode::SchemaError, where + ": " + what);
}

inline double number_at(const nlohmann::json & j, const std::string & where)
{
  if (!j.is_number()) { schema_error(where, "expected a number"); }
  return j.get<double>();
}

inline std::array<double, 2> pair_at(const nlohmann::json & j, const std::string & where)
{
  if (!j.is_array() || j.size() != 2) { schema_error(where, "expected an array of exactly 2 numbers"); }
  return {number_at(j[0], where + "[0]"), number_at(j[1], where + "[1]")};
}

inline std::vector<std::array<double, 2>> pairs_at(const nlohmann::json & j, const std::string & where)
{
  if (!j.is_array()) { schema_error(where, "expected an array"); }
  std::vector<std::array<double, 2>> out;
  for (std::size_t i = 0; i < j.size(); ++i) { out.push_back(pair_at(j[i], where + "[" + std::to_string(i) + "]")); }
  return out;
}

}  // namespace detail

/// Parses and validates problem text. `source` names the input in error messages.
inline ProblemFile parse_problem_text(const std::string & text, const std::string & source = "<input>")
{
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error & e) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::ParseError,
                source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": malformed JSON");
  }

  if (!doc.is_object()) { detail::schema_error(source, "top level must be an object"); }
  if (!doc.contains("A")) { detail::schema_error(source, "missing field \"A\""); }
  if (!doc.contains("b")) { detail::schema_error(source, "missing field \"b\""); }

  ProblemFile p;
  p.A = detail::pairs_at(doc["A"], "A");
  const auto & b = doc["b"];
  if (!b.is_array()) { detail::schema_error("b", "expected an array"); }
  for (std::size_t i = 0; i < b.size(); ++i) { p.b.push_back(detail::number_at(b[i], "b[" + std::to_string(i) + "]")); }
  if (p.b.size() != p.A.size()) {
    detail::schema_error("b", "has " + std::to_string(p.b.size()) + " entries but A has " + std::to_string(p.A.size()) + " rows");
  }
  for (std::size_t i = 0; i < p.A.size(); ++i) {
    if (p.A[i][0] == 0.0 && p.A[i][1] == 0.0) { detail::schema_error("A[" + std::to_string(i) + "]", "constraint row is zero"); }
  }
  if (doc.contains("objectives")) { p.objectives = detail::pairs_at(doc["objectives"], "objectives"); }
  if (doc.contains("nonneg")) {
    if (!doc["nonneg"].is_boolean()) { detail::schema_error("nonneg", "expected true or false"); }
    p.nonneg = doc["nonneg"].get<bool>();
  }
  return p;
}

inline ProblemFile parse_problem(const std::string & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) { throw Error(ErrorCode::ParseError, path + ": cannot open file"); }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem_text(buffer.str(), path);
}

inline nlohmann::ordered_json to_json(const ProblemFile & p)
{
  nlohmann::ordered_json j;
  j["A"] = p.A;
  j["b"] = p.b;
  j["objectives"] = p.objectives;
  j["nonneg"] = p.nonneg;
  return j;
}

}  // namespace molfan
