#include "emodetect/spotting.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "emodetect/bundled.hpp"
#include "emodetect/lexicons.hpp"

namespace emodetect {

const SpottingConfig& SpottingConfig::defaults() {
  static const SpottingConfig config = [] {
    SpottingConfig c;
    std::istringstream cues{std::string(bundled::negation_cues_text())};
    c.negation_cues = parse_negation_cues(cues, "<bundled>/negation_cues.txt");
    std::istringstream intensity{std::string(bundled::intensity_text())};
    c.intensity_map = parse_intensity_map(intensity, "<bundled>/intensity.tsv");
    return c;
  }();
  return config;
}

void SpottingConfig::validate() const {
  for (const auto& [token, multiplier] : intensity_map) {
    if (!(multiplier > 0.0) || !std::isfinite(multiplier)) {
      throw std::invalid_argument("intensity multiplier for '" + token +
                                  "' must be positive");
    }
  }
}

std::vector<EmotionHit> find_hits(std::span<const Token> tokens,
                                  const EmotionOntology& ontology,
                                  const SpottingConfig& config) {
  std::vector<EmotionHit> hits;
  const std::size_t max_len = ontology.max_keyword_tokens();
  std::string phrase;

  for (const TokenRange& sentence : split_sentences(tokens)) {
    std::size_t i = sentence.begin;
    while (i < sentence.end) {
      const std::size_t longest = std::min(max_len, sentence.end - i);
      std::optional<NodeId> owner;
      std::size_t len = longest;
      for (; len >= 1; --len) {
        phrase = tokens[i].normalized;
        for (std::size_t k = 1; k < len; ++k) {
          phrase += ' ';
          phrase += tokens[i + k].normalized;
        }
        if ((owner = ontology.keyword_owner(phrase))) break;
      }
      if (!owner) {
        ++i;
        continue;
      }

      EmotionHit hit;
      hit.node = *owner;
      hit.node_name = ontology.node(*owner).name;
      hit.first = i;
      hit.last = i + len - 1;

      const std::size_t neg_from =
          i - std::min(config.negation_window, i - sentence.begin);
      for (std::size_t j = neg_from; j < i; ++j) {
        if (config.negation_cues.contains(tokens[j].normalized)) {
          hit.negated = true;
          break;
        }
      }
      const std::size_t int_from =
          i - std::min(config.intensity_window, i - sentence.begin);
      for (std::size_t j = i; j-- > int_from;) {
        if (auto it = config.intensity_map.find(tokens[j].normalized);
            it != config.intensity_map.end()) {
          hit.intensity = it->second;
          break;
        }
      }

      hits.push_back(std::move(hit));
      i += len;
    }
  }
  return hits;
}

}  // namespace emodetect
