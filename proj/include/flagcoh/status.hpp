#pragma once

#include <string_view>

namespace flagcoh {

/// Outcome of a comparison between a computed object and a predicted one.
enum class Status { agree, disagree, outside_hypothesis, error };

constexpr std::string_view to_string(Status s) {
  switch (s) {
  case Status::agree: return "agree";
  case Status::disagree: return "disagree";
  case Status::outside_hypothesis: return "outside-hypothesis";
  case Status::error: return "error";
  }
  return "error";
}

} // namespace flagcoh
