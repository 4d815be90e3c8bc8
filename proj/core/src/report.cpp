#include "emodetect/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace emodetect {

std::string format_decimal(double value) {
  // to_chars rounds the exact binary value to nearest, ties to even.
  std::array<char, 64> buf{};
  const double v = value + 0.0;  // folds -0.0
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 6);
  if (ec != std::errc{}) return "0.000000";
  return std::string(buf.data(), ptr);
}

std::string result_to_json(const DetectionResult& result, std::string_view source) {
  nlohmann::ordered_json j;
  j["source"] = source;
  j["mode"] = to_string(result.mode);
  j["label"] = result.label;
  j["tie"] = result.tie;
  j["scores"] = nlohmann::ordered_json::array();
  for (const auto& [name, score] : result.scores.entries()) {
    j["scores"].push_back({name, format_decimal(score)});
  }
  j["evidence"] = nlohmann::ordered_json::array();
  for (const EmotionHit& hit : result.evidence) {
    nlohmann::ordered_json e;
    e["node"] = hit.node_name;
    e["span"] = {hit.first, hit.last};
    e["intensity"] = format_decimal(hit.intensity);
    e["negated"] = hit.negated;
    j["evidence"].push_back(std::move(e));
  }
  return j.dump();
}

std::string result_to_text(const DetectionResult& result, std::string_view source,
                           const std::vector<CounterOutcome>& counters) {
  std::ostringstream out;
  out << "source:   " << source << '\n'
      << "mode:     " << to_string(result.mode) << '\n'
      << "label:    " << result.label << (result.tie ? " (tie)" : "") << '\n'
      << "scores:\n";
  std::size_t width = 0;
  for (const auto& entry : result.scores.entries()) {
    width = std::max(width, entry.first.size());
  }
  for (const auto& [name, score] : result.scores.entries()) {
    out << "  " << name << std::string(width - name.size() + 2, ' ')
        << format_decimal(score) << '\n';
  }
  out << "evidence:";
  if (result.evidence.empty()) out << " none";
  out << '\n';
  for (const EmotionHit& hit : result.evidence) {
    out << "  " << hit.node_name << " tokens " << hit.first << '-' << hit.last
        << " x" << format_decimal(hit.intensity) << (hit.negated ? " negated" : "")
        << '\n';
  }
  if (!counters.empty()) {
    out << "counter:\n";
    for (const CounterOutcome& c : counters) {
      out << "  " << c.first << " vs " << c.second << ": " << c.winner
          << (c.tie ? " (tie)" : "") << '\n';
    }
  }
  return out.str();
}

}  // namespace emodetect
