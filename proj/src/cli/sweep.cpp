#include "flagcoh/cli/sweep.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace flagcoh::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos)
    return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_integer(const std::string& s, long long& value) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string> expand(const std::string& value, int line) {
  std::vector<std::string> out;
  std::stringstream parts(value);
  std::string part;
  while (std::getline(parts, part, ';')) {
    part = trim(part);
    if (part.empty())
      throw std::invalid_argument("line " + std::to_string(line) + ": empty alternative");
    const auto dots = part.find("..");
    long long low = 0, high = 0;
    if (dots != std::string::npos && parse_integer(trim(part.substr(0, dots)), low) &&
        parse_integer(trim(part.substr(dots + 2)), high)) {
      if (high < low)
        throw std::invalid_argument("line " + std::to_string(line) + ": empty range " + part);
      for (long long x = low; x <= high; ++x)
        out.push_back(std::to_string(x));
    } else {
      out.push_back(part);
    }
  }
  return out;
}

} // namespace

std::size_t SweepConfig::size() const {
  std::size_t total = 1;
  for (const auto& [key, values] : axes)
    total *= values.size();
  return total;
}

std::vector<std::string> SweepConfig::arguments(std::size_t index) const {
  std::vector<std::string> args = command;
  std::vector<std::size_t> choice(axes.size());
  for (std::size_t k = axes.size(); k-- > 0;) {
    choice[k] = index % axes[k].second.size();
    index /= axes[k].second.size();
  }
  for (std::size_t k = 0; k < axes.size(); ++k) {
    const std::string& value = axes[k].second[choice[k]];
    if (value == "false")
      continue;
    args.push_back("--" + axes[k].first);
    if (value != "true")
      args.push_back(value);
  }
  return args;
}

SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig config;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty())
      continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(line) + ": expected key = value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::invalid_argument("line " + std::to_string(line) + ": empty key or value");
    if (key == "command") {
      if (!config.command.empty())
        throw std::invalid_argument("line " + std::to_string(line) + ": command given twice");
      std::istringstream words(value);
      for (std::string w; words >> w;)
        config.command.push_back(w);
      continue;
    }
    for (const auto& [existing, values] : config.axes)
      if (existing == key)
        throw std::invalid_argument("line " + std::to_string(line) + ": duplicate key " + key);
    config.axes.emplace_back(key, expand(value, line));
  }
  if (config.command.empty())
    throw std::invalid_argument("sweep configuration has no command");
  if (config.command.front() == "sweep")
    throw std::invalid_argument("sweeps cannot be nested");
  return config;
}

} // namespace flagcoh::cli
