#pragma once

// Verdicts produced by the command-line front end and their JSON, CSV and
// plain-text renderings.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "flagcoh/characters.hpp"
#include "flagcoh/complex.hpp"
#include "flagcoh/status.hpp"

namespace flagcoh::cli {

using Json = nlohmann::json;

inline constexpr const char* kReportVersion = "1.0";

struct Verdict {
  std::string subject;
  /// Object of parameter name -> value.
  Json parameters = Json::object();
  Status status = Status::agree;
  Json payload = Json::object();
  /// Required for disagreements: the first differing coefficient or dimension.
  std::optional<std::string> witness;
  /// Wall-clock seconds; only recorded on request so reports stay reproducible.
  std::optional<double> timing;
};

/// One line of a dimension table.
struct CsvRow {
  std::string subject;
  std::string table;
  Json parameters = Json::object();
  /// Degree or multidegree the dimension belongs to.
  std::string index;
  std::string dimension;
};

struct Report {
  std::string command;
  Json parameters = Json::object();
  std::vector<Verdict> verdicts;
  std::vector<CsvRow> rows;
  /// Human-readable lines printed before the verdict table.
  std::vector<std::string> lines;

  void append(Report&& other);
};

[[nodiscard]] Json to_json(const LaurentPolynomial& f);
[[nodiscard]] Json to_json(const PoincarePolynomial& h);
[[nodiscard]] Json to_json(const RankTable& t);
[[nodiscard]] Json to_json(const Verdict& v);
[[nodiscard]] Json to_json(const Report& r);

/// Exponent vector rendered as "(1,2,3)".
[[nodiscard]] std::string exponent_string(const Exponent& e);

void write_json(const Report& r, std::ostream& out);
void write_csv(const Report& r, std::ostream& out);
void write_text(const Report& r, std::ostream& out);

/// 2 if any verdict disagrees, 1 if any errored, else 0. Errors win.
[[nodiscard]] int exit_code(const Report& r);

} // namespace flagcoh::cli
