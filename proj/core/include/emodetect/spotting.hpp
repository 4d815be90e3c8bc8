#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "emodetect/ontology.hpp"
#include "emodetect/text.hpp"

namespace emodetect {

/// One matched keyword occurrence.
struct EmotionHit {
  NodeId node;
  std::string node_name;
  std::size_t first = 0;  // token indices, inclusive
  std::size_t last = 0;
  double intensity = 1.0;
  bool negated = false;

  friend bool operator==(const EmotionHit&, const EmotionHit&) = default;
};

struct SpottingConfig {
  std::set<std::string> negation_cues;
  std::size_t negation_window = 3;
  std::map<std::string, double> intensity_map;
  std::size_t intensity_window = 2;

  /// Cues and modifiers from the bundled data files.
  static const SpottingConfig& defaults();

  /// Throws std::invalid_argument if a multiplier is not positive and finite.
  void validate() const;
};

/// Left-to-right, longest-match, non-overlapping keyword spotting.
///
/// A hit never crosses a sentence boundary. It is negated when a negation
/// cue appears among the `negation_window` tokens before it in the same
/// sentence. Its intensity is the multiplier of the nearest modifier among
/// the `intensity_window` preceding tokens in the same sentence, else 1.
std::vector<EmotionHit> find_hits(std::span<const Token> tokens,
                                  const EmotionOntology& ontology,
                                  const SpottingConfig& config);

}  // namespace emodetect
