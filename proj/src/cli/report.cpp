#include "flagcoh/cli/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace flagcoh::cli {

void Report::append(Report&& other) {
  std::move(other.verdicts.begin(), other.verdicts.end(), std::back_inserter(verdicts));
  std::move(other.rows.begin(), other.rows.end(), std::back_inserter(rows));
  std::move(other.lines.begin(), other.lines.end(), std::back_inserter(lines));
}

namespace {

Json integer_json(const mpz_class& value) {
  if (value.fits_slong_p())
    return value.get_si();
  return value.get_str();
}

std::string scalar_text(const Json& value) {
  if (value.is_string())
    return value.get<std::string>();
  return value.dump();
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos)
    return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"')
      quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string parameter_text(const Json& parameters) {
  std::string text;
  for (const auto& [key, value] : parameters.items())
    text += (text.empty() ? "" : " ") + key + "=" + scalar_text(value);
  return text;
}

} // namespace

std::string exponent_string(const Exponent& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i)
    s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

Json to_json(const LaurentPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms())
    terms.push_back({{"exponents", e}, {"coeff", integer_json(c)}});
  return terms;
}

Json to_json(const PoincarePolynomial& h) { return h.normalized().coefficients; }

Json to_json(const RankTable& t) { return {{"dims", t.dims}, {"ranks", t.ranks}}; }

Json to_json(const Verdict& v) {
  Json j;
  j["subject"] = v.subject;
  j["parameters"] = v.parameters;
  j["status"] = std::string(to_string(v.status));
  j["payload"] = v.payload;
  j["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
  j["timing"] = v.timing ? Json(*v.timing) : Json(nullptr);
  return j;
}

Json to_json(const Report& r) {
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back(to_json(v));
  return {{"version", kReportVersion},
          {"command", r.command},
          {"parameters", r.parameters},
          {"verdicts", std::move(verdicts)}};
}

void write_json(const Report& r, std::ostream& out) { out << to_json(r).dump(2) << '\n'; }

void write_csv(const Report& r, std::ostream& out) {
  std::vector<std::string> keys;
  for (const auto& row : r.rows)
    for (const auto& [key, value] : row.parameters.items())
      if (std::find(keys.begin(), keys.end(), key) == keys.end())
        keys.push_back(key);
  out << "subject,table";
  for (const auto& key : keys)
    out << ',' << csv_field(key);
  out << ",index,dimension\n";
  for (const auto& row : r.rows) {
    out << csv_field(row.subject) << ',' << csv_field(row.table);
    for (const auto& key : keys)
      out << ','
          << (row.parameters.contains(key) ? csv_field(scalar_text(row.parameters[key])) : "");
    out << ',' << csv_field(row.index) << ',' << csv_field(row.dimension) << '\n';
  }
}

void write_text(const Report& r, std::ostream& out) {
  for (const auto& line : r.lines)
    out << line << '\n';
  if (r.verdicts.empty())
    return;
  std::size_t subject_width = 7, status_width = 6;
  for (const auto& v : r.verdicts) {
    subject_width = std::max(subject_width, v.subject.size());
    status_width = std::max(status_width, to_string(v.status).size());
  }
  out << '\n'
      << std::left << std::setw(static_cast<int>(subject_width)) << "subject" << "  "
      << std::setw(static_cast<int>(status_width)) << "status" << "  parameters\n";
  for (const auto& v : r.verdicts) {
    out << std::left << std::setw(static_cast<int>(subject_width)) << v.subject << "  "
        << std::setw(static_cast<int>(status_width)) << to_string(v.status) << "  "
        << parameter_text(v.parameters);
    if (v.timing) {
      std::ostringstream t;
      t << std::fixed << std::setprecision(3) << *v.timing;
      out << "  [" << t.str() << " s]";
    }
    out << '\n';
    if (v.witness)
      out << "    witness: " << *v.witness << '\n';
  }
}

int exit_code(const Report& r) {
  bool disagree = false;
  for (const auto& v : r.verdicts) {
    if (v.status == Status::error)
      return 1;
    disagree = disagree || v.status == Status::disagree;
  }
  return disagree ? 2 : 0;
}

} // namespace flagcoh::cli
