#pragma once

#include <string>
#include <string_view>

#include "emodetect/scoring.hpp"

namespace emodetect {

/// Fixed-point rendering with exactly six fractional digits, rounded
/// half-to-even on the exact binary value.
std::string format_decimal(double value);

/// One detection result as a single-line JSON object with the fixed field
/// order source, mode, label, tie, scores, evidence.
std::string result_to_json(const DetectionResult& result, std::string_view source);

/// Human-readable rendering; counter outcomes are listed when non-empty.
std::string result_to_text(const DetectionResult& result, std::string_view source,
                           const std::vector<CounterOutcome>& counters = {});

}  // namespace emodetect
