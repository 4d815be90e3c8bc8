#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "emodetect/ontology.hpp"
#include "emodetect/scoring.hpp"

// Loaders for the small line-oriented data files. Every loader skips blank
// lines and lines starting with '#', and throws DataError naming the source
// and line on malformed input.

namespace emodetect {

/// One lowercase token per line.
std::set<std::string> parse_negation_cues(std::istream& in,
                                          const std::string& source);

/// `token<TAB>multiplier`, multiplier > 0.
std::map<std::string, double> parse_intensity_map(std::istream& in,
                                                  const std::string& source);

/// `token<TAB>Primary<TAB>probability`, probability in [0, 1]. When an
/// ontology is given, Primary must name one of its primaries.
AffinityLexicon parse_affinity_lexicon(std::istream& in,
                                       const std::string& source,
                                       const EmotionOntology* ontology = nullptr);

/// `PrimaryA<TAB>PrimaryB`; members distinct and each used at most once.
/// When an ontology is given, both must name its primaries.
CounterPairing parse_counter_pairing(std::istream& in, const std::string& source,
                                     const EmotionOntology* ontology = nullptr);

std::set<std::string> load_negation_cues(const std::filesystem::path& path);
std::map<std::string, double> load_intensity_map(const std::filesystem::path& path);
AffinityLexicon load_affinity_lexicon(const std::filesystem::path& path,
                                      const EmotionOntology* ontology = nullptr);
CounterPairing load_counter_pairing(const std::filesystem::path& path,
                                    const EmotionOntology* ontology = nullptr);

/// Reads a whole file; throws DataError(path, 0, ...) when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace emodetect
