#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace emodetect::testing {

inline constexpr std::string_view kT1 = R"(Love
Love/Affection: affection, fondness
Love/Affection/Adoration: adoration
Joy
Joy/Cheerfulness: cheerfulness, happy, hooray
Anger
Anger/Rage: rage, hate
Sadness
Sadness/Suffering: suffering, hurt
Fear
Fear/Horror: horror
Surprise
Surprise/Amazement: amazement, amazed
)";

/// A generated ontology kept as plain path records, so the oracle below never
/// goes through EmotionOntology.
struct RandomOntology {
  std::vector<std::vector<std::string>> paths;  // declaration order
  std::string text;                             // ontology file contents
};

inline std::string letters_name(std::size_t n) {
  std::string suffix;
  do {
    suffix.push_back(static_cast<char>('a' + n % 26));
    n /= 26;
  } while (n > 0);
  return "Node" + suffix;
}

/// At most `max_nodes` nodes, depth <= 3, between 1 and 6 primaries.
inline RandomOntology random_ontology(std::mt19937_64& rng, std::size_t max_nodes = 50) {
  static const char* kPrimaries[] = {"Love", "Joy", "Anger", "Sadness", "Fear", "Surprise"};
  RandomOntology out;
  std::uniform_int_distribution<std::size_t> prim_count(1, 6);
  std::uniform_int_distribution<std::size_t> total_count(0, max_nodes);
  const std::size_t primaries = prim_count(rng);
  const std::size_t total = std::max(primaries, total_count(rng));

  for (std::size_t i = 0; i < primaries; ++i) out.paths.push_back({kPrimaries[i]});
  std::size_t fresh = 0;
  while (out.paths.size() < total) {
    std::uniform_int_distribution<std::size_t> pick(0, out.paths.size() - 1);
    const auto& parent = out.paths[pick(rng)];
    if (parent.size() >= 3) continue;
    auto path = parent;
    path.push_back(letters_name(fresh++));
    out.paths.push_back(std::move(path));
  }
  for (const auto& path : out.paths) {
    for (std::size_t k = 0; k < path.size(); ++k) {
      if (k) out.text += '/';
      out.text += path[k];
    }
    out.text += '\n';
  }
  return out;
}

/// Random frequencies in [0, 10] over a random subset of nodes.
inline std::map<std::string, double> random_frequencies(const RandomOntology& onto,
                                                        std::mt19937_64& rng) {
  std::map<std::string, double> freqs;
  std::bernoulli_distribution include(0.6);
  std::uniform_real_distribution<double> value(0.0, 10.0);
  for (const auto& path : onto.paths) {
    if (include(rng)) freqs[path.back()] = value(rng);
  }
  return freqs;
}

/// Direct subtree sum: every node contributes freq/depth (or freq*depth) to
/// the primary named by the first segment of its path. No propagation.
inline std::map<std::string, double> subtree_sum_oracle(
    const std::vector<std::vector<std::string>>& paths,
    const std::map<std::string, double>& freqs, bool proportional = false) {
  std::map<std::string, double> totals;
  for (const auto& path : paths) {
    auto& total = totals[path.front()];
    const auto it = freqs.find(path.back());
    if (it == freqs.end()) continue;
    const double depth = static_cast<double>(path.size());
    total += proportional ? it->second * depth : it->second / depth;
  }
  return totals;
}

inline std::vector<std::vector<std::string>> t1_paths() {
  return {{"Love"},
          {"Love", "Affection"},
          {"Love", "Affection", "Adoration"},
          {"Joy"},
          {"Joy", "Cheerfulness"},
          {"Anger"},
          {"Anger", "Rage"},
          {"Sadness"},
          {"Sadness", "Suffering"},
          {"Fear"},
          {"Fear", "Horror"},
          {"Surprise"},
          {"Surprise", "Amazement"}};
}

inline bool close_rel(double a, double b, double rel) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= rel * scale;
}

}  // namespace emodetect::testing
