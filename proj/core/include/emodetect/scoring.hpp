#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "emodetect/ontology.hpp"
#include "emodetect/spotting.hpp"
#include "emodetect/text.hpp"

namespace emodetect {

class ScoringError : public std::runtime_error {
 public:
  enum class Kind { unknown_node, unknown_primary, mismatched_primaries };

  ScoringError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

enum class DepthWeighting { inverse, proportional };
enum class Mode { keyword, affinity, hybrid };

std::string_view to_string(DepthWeighting weighting);
std::string_view to_string(Mode mode);
std::optional<DepthWeighting> parse_depth_weighting(std::string_view text);
std::optional<Mode> parse_mode(std::string_view text);

inline constexpr std::string_view kNeutral = "Neutral";

/// Score per primary class, ordered by canonical rank.
class ScoreTable {
 public:
  using Entry = std::pair<std::string, double>;

  ScoreTable() = default;
  /// All primaries of `ontology` at zero.
  explicit ScoreTable(const EmotionOntology& ontology);

  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  bool contains(std::string_view primary) const;
  /// Throws ScoringError(unknown_primary).
  double at(std::string_view primary) const;
  double& at(std::string_view primary);

  bool all_zero() const;
  bool same_primaries(const ScoreTable& other) const;

  friend bool operator==(const ScoreTable&, const ScoreTable&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Effective keyword frequency per node name.
using NodeFrequencies = std::map<std::string, double>;

/// Sum of intensity over non-negated hits, keyed by node name.
NodeFrequencies node_frequencies(std::span<const EmotionHit> hits);

/// Each node contributes freq/depth (inverse) or freq*depth (proportional);
/// contributions are accumulated bottom-up so every primary ends up with
/// the sum over its subtree. Unknown node names throw
/// ScoringError(unknown_node).
ScoreTable propagate_scores(const EmotionOntology& ontology,
                            const NodeFrequencies& freqs,
                            DepthWeighting weighting = DepthWeighting::inverse);

struct AffinityEntry {
  std::string primary;
  double probability = 0.0;
};
using AffinityLexicon = std::unordered_map<std::string, AffinityEntry>;

/// Sum of lexicon probabilities per primary over all token occurrences.
/// Word-level only: no negation, intensity or depth.
ScoreTable affinity_score(std::span<const Token> tokens,
                          const AffinityLexicon& lexicon,
                          const EmotionOntology& ontology);

/// alpha * keyword + (1 - alpha) * affinity, per primary.
ScoreTable hybrid_blend(const ScoreTable& keyword, const ScoreTable& affinity,
                        double alpha);

struct CounterPairing {
  std::vector<std::pair<std::string, std::string>> pairs;

  /// Joy/Sadness, Love/Anger, Fear/Surprise (from data/counter_pairs.tsv).
  static const CounterPairing& defaults();
};

struct CounterOutcome {
  std::string first;
  std::string second;
  std::string winner;
  bool tie = false;

  friend bool operator==(const CounterOutcome&, const CounterOutcome&) = default;
};

/// For each pair, the member with the strictly greater score; equal scores
/// go to the member earlier in canonical order with tie set.
std::vector<CounterOutcome> counter_compare(const ScoreTable& scores,
                                            const CounterPairing& pairing);

struct DetectOptions {
  SpottingConfig spotting = SpottingConfig::defaults();
  DepthWeighting weighting = DepthWeighting::inverse;
  Mode mode = Mode::keyword;
  double alpha = 0.5;
  /// Required for affinity and hybrid modes.
  const AffinityLexicon* affinity = nullptr;
  std::vector<std::string> tie_order{kCanonicalOrder.begin(),
                                     kCanonicalOrder.end()};
};

struct DetectionResult {
  std::string label;
  ScoreTable scores;
  bool tie = false;
  std::vector<EmotionHit> evidence;
  Mode mode = Mode::keyword;

  bool neutral() const noexcept { return label == kNeutral; }
  friend bool operator==(const DetectionResult&, const DetectionResult&) = default;
};

struct Decision {
  std::string label;
  bool tie = false;
};

/// Highest-scoring primary; shared maxima go to the earliest entry of
/// `tie_order` (names missing from it rank after, in table order).
/// All-zero tables yield Neutral.
Decision decide(const ScoreTable& scores, std::span<const std::string> tie_order);

/// tokenize -> find_hits -> node_frequencies -> propagate_scores -> decide.
DetectionResult detect(std::string_view text, const EmotionOntology& ontology,
                       const DetectOptions& options = {});

}  // namespace emodetect
