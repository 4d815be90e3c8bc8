#include "emodetect/scoring.hpp"

#include <algorithm>
#include <cmath>

namespace emodetect {
namespace {

std::optional<std::size_t> find_entry(std::span<const ScoreTable::Entry> entries,
                                      std::string_view name) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first == name) return i;
  }
  const std::string lowered = to_lower(name);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (to_lower(entries[i].first) == lowered) return i;
  }
  return std::nullopt;
}

[[noreturn]] void unknown_primary(std::string_view name) {
  throw ScoringError(ScoringError::Kind::unknown_primary,
                     "unknown primary class '" + std::string(name) + "'");
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
}

}  // namespace

std::string_view to_string(DepthWeighting weighting) {
  return weighting == DepthWeighting::inverse ? "inverse" : "proportional";
}

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::keyword: return "keyword";
    case Mode::affinity: return "affinity";
    case Mode::hybrid: return "hybrid";
  }
  return "keyword";
}

std::optional<DepthWeighting> parse_depth_weighting(std::string_view text) {
  if (text == "inverse") return DepthWeighting::inverse;
  if (text == "proportional") return DepthWeighting::proportional;
  return std::nullopt;
}

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "keyword") return Mode::keyword;
  if (text == "affinity") return Mode::affinity;
  if (text == "hybrid") return Mode::hybrid;
  return std::nullopt;
}

// ScoreTable

ScoreTable::ScoreTable(const EmotionOntology& ontology) {
  for (NodeId id : ontology.ranked_primaries()) {
    entries_.emplace_back(ontology.node(id).name, 0.0);
  }
}

bool ScoreTable::contains(std::string_view primary) const {
  return find_entry(entries_, primary).has_value();
}

double ScoreTable::at(std::string_view primary) const {
  const auto i = find_entry(entries_, primary);
  if (!i) unknown_primary(primary);
  return entries_[*i].second;
}

double& ScoreTable::at(std::string_view primary) {
  const auto i = find_entry(entries_, primary);
  if (!i) unknown_primary(primary);
  return entries_[*i].second;
}

bool ScoreTable::all_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.second == 0.0; });
}

bool ScoreTable::same_primaries(const ScoreTable& other) const {
  return std::equal(entries_.begin(), entries_.end(), other.entries_.begin(),
                    other.entries_.end(),
                    [](const Entry& a, const Entry& b) { return a.first == b.first; });
}

// Scoring operations

NodeFrequencies node_frequencies(std::span<const EmotionHit> hits) {
  NodeFrequencies freqs;
  for (const EmotionHit& hit : hits) {
    if (!hit.negated) freqs[hit.node_name] += hit.intensity;
  }
  return freqs;
}

ScoreTable propagate_scores(const EmotionOntology& ontology, const NodeFrequencies& freqs,
                            DepthWeighting weighting) {
  std::vector<double> score(ontology.size(), 0.0);
  for (const auto& [name, freq] : freqs) {
    const auto id = ontology.find(name);
    if (!id) {
      throw ScoringError(ScoringError::Kind::unknown_node,
                         "unknown ontology node '" + name + "'");
    }
    if (!(freq >= 0.0)) {
      throw std::invalid_argument("frequency of '" + name + "' is negative");
    }
    const double depth = ontology.node(*id).depth;
    score[id->value] += weighting == DepthWeighting::inverse ? freq / depth : freq * depth;
  }

  // Reverse breadth-first order visits every depth-3 node before any depth-2
  // node, so each child is complete before it is folded into its parent.
  const std::vector<NodeId> order = bfs_traverse(ontology);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (const auto& parent = ontology.node(*it).parent) {
      score[parent->value] += score[it->value];
    }
  }

  ScoreTable table(ontology);
  for (NodeId id : ontology.ranked_primaries()) {
    table.at(ontology.node(id).name) = score[id.value];
  }
  return table;
}

ScoreTable affinity_score(std::span<const Token> tokens, const AffinityLexicon& lexicon,
                          const EmotionOntology& ontology) {
  ScoreTable table(ontology);
  for (const Token& token : tokens) {
    if (auto it = lexicon.find(token.normalized); it != lexicon.end()) {
      table.at(it->second.primary) += it->second.probability;
    }
  }
  return table;
}

ScoreTable hybrid_blend(const ScoreTable& keyword, const ScoreTable& affinity,
                        double alpha) {
  check_alpha(alpha);
  if (!keyword.same_primaries(affinity)) {
    throw ScoringError(ScoringError::Kind::mismatched_primaries,
                       "score tables cover different primary classes");
  }
  ScoreTable blended = keyword;
  for (const auto& [name, value] : keyword.entries()) {
    blended.at(name) = alpha * value + (1.0 - alpha) * affinity.at(name);
  }
  return blended;
}

std::vector<CounterOutcome> counter_compare(const ScoreTable& scores,
                                            const CounterPairing& pairing) {
  std::vector<CounterOutcome> outcomes;
  outcomes.reserve(pairing.pairs.size());
  for (const auto& [first, second] : pairing.pairs) {
    const double a = scores.at(first);
    const double b = scores.at(second);
    CounterOutcome outcome{first, second, {}, false};
    if (a > b) {
      outcome.winner = first;
    } else if (b > a) {
      outcome.winner = second;
    } else {
      outcome.tie = true;
      outcome.winner =
          canonical_rank(second) < canonical_rank(first) ? second : first;
    }
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

Decision decide(const ScoreTable& scores, std::span<const std::string> tie_order) {
  const auto entries = scores.entries();
  double best = 0.0;
  for (const auto& entry : entries) best = std::max(best, entry.second);
  if (best == 0.0) return {std::string(kNeutral), false};

  auto rank = [&](std::size_t entry_index) {
    const std::string lowered = to_lower(entries[entry_index].first);
    for (std::size_t k = 0; k < tie_order.size(); ++k) {
      if (to_lower(tie_order[k]) == lowered) return k;
    }
    return tie_order.size() + entry_index;
  };

  std::optional<std::size_t> winner;
  std::size_t tied = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].second != best) continue;
    ++tied;
    if (!winner || rank(i) < rank(*winner)) winner = i;
  }
  return {entries[*winner].first, tied > 1};
}

DetectionResult detect(std::string_view text, const EmotionOntology& ontology,
                       const DetectOptions& options) {
  options.spotting.validate();
  check_alpha(options.alpha);
  if (options.mode != Mode::keyword && options.affinity == nullptr) {
    throw std::invalid_argument("affinity and hybrid modes need an affinity lexicon");
  }

  DetectionResult result;
  result.mode = options.mode;
  const std::vector<Token> tokens = tokenize(text);

  ScoreTable keyword_scores(ontology);
  if (options.mode != Mode::affinity) {
    result.evidence = find_hits(tokens, ontology, options.spotting);
    keyword_scores =
        propagate_scores(ontology, node_frequencies(result.evidence), options.weighting);
  }
  switch (options.mode) {
    case Mode::keyword:
      result.scores = std::move(keyword_scores);
      break;
    case Mode::affinity:
      result.scores = affinity_score(tokens, *options.affinity, ontology);
      break;
    case Mode::hybrid:
      result.scores = hybrid_blend(
          keyword_scores, affinity_score(tokens, *options.affinity, ontology),
          options.alpha);
      break;
  }

  const Decision decision = decide(result.scores, options.tie_order);
  result.label = decision.label;
  result.tie = decision.tie;
  return result;
}

}  // namespace emodetect
