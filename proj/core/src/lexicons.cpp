#include "emodetect/lexicons.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>

#include "emodetect/bundled.hpp"
#include "emodetect/text.hpp"

namespace emodetect {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find('\t', start);
    fields.emplace_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

// Calls `fn(line, number)` for every non-blank, non-comment line.
void for_each_record(std::istream& in,
                     const std::function<void(std::string_view, std::size_t)>& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    fn(line, number);
  }
}

bool is_single_token(const std::string& s) {
  return !s.empty() && s.find(' ') == std::string::npos && normalize_phrase(s) == s;
}

std::optional<double> parse_decimal(std::string_view s) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::string resolve_primary(const std::string& name, const EmotionOntology* ontology,
                             const std::string& source, std::size_t line) {
  if (!ontology) return name;
  const auto id = ontology->find(name);
  if (!id || !ontology->node(*id).is_primary()) {
    throw DataError(source, line, "'" + name + "' is not a primary class");
  }
  return ontology->node(*id).name;
}

template <typename T>
T load_with(const std::filesystem::path& path,
            const std::function<T(std::istream&, const std::string&)>& parse) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string(), 0, "cannot open file");
  return parse(in, path.string());
}

}  // namespace

std::set<std::string> parse_negation_cues(std::istream& in, const std::string& source) {
  std::set<std::string> cues;
  for_each_record(in, [&](std::string_view line, std::size_t number) {
    const std::string cue(trim(line));
    if (!is_single_token(cue)) {
      throw DataError(source, number, "negation cue '" + cue +
                                          "' is not a single lowercase token");
    }
    cues.insert(cue);
  });
  return cues;
}

std::map<std::string, double> parse_intensity_map(std::istream& in,
                                                  const std::string& source) {
  std::map<std::string, double> map;
  for_each_record(in, [&](std::string_view line, std::size_t number) {
    const auto fields = split_tabs(line);
    if (fields.size() != 2) {
      throw DataError(source, number, "expected token<TAB>multiplier");
    }
    if (!is_single_token(fields[0])) {
      throw DataError(source, number,
                      "'" + fields[0] + "' is not a single lowercase token");
    }
    const auto value = parse_decimal(fields[1]);
    if (!value || *value <= 0.0) {
      throw DataError(source, number,
                      "multiplier '" + fields[1] + "' is not a positive decimal");
    }
    if (!map.emplace(fields[0], *value).second) {
      throw DataError(source, number, "duplicate modifier '" + fields[0] + "'");
    }
  });
  return map;
}

AffinityLexicon parse_affinity_lexicon(std::istream& in, const std::string& source,
                                       const EmotionOntology* ontology) {
  AffinityLexicon lexicon;
  for_each_record(in, [&](std::string_view line, std::size_t number) {
    const auto fields = split_tabs(line);
    if (fields.size() != 3) {
      throw DataError(source, number, "expected token<TAB>Primary<TAB>probability");
    }
    if (!is_single_token(fields[0])) {
      throw DataError(source, number,
                      "'" + fields[0] + "' is not a single lowercase token");
    }
    if (fields[1].empty()) throw DataError(source, number, "empty primary name");
    const auto p = parse_decimal(fields[2]);
    if (!p || *p < 0.0 || *p > 1.0) {
      throw DataError(source, number,
                      "probability '" + fields[2] + "' is not a decimal in [0,1]");
    }
    AffinityEntry entry{resolve_primary(fields[1], ontology, source, number), *p};
    if (!lexicon.emplace(fields[0], std::move(entry)).second) {
      throw DataError(source, number, "duplicate token '" + fields[0] + "'");
    }
  });
  return lexicon;
}

CounterPairing parse_counter_pairing(std::istream& in, const std::string& source,
                                     const EmotionOntology* ontology) {
  CounterPairing pairing;
  std::set<std::string> used;
  for_each_record(in, [&](std::string_view line, std::size_t number) {
    const auto fields = split_tabs(line);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw DataError(source, number, "expected PrimaryA<TAB>PrimaryB");
    }
    std::string a = resolve_primary(fields[0], ontology, source, number);
    std::string b = resolve_primary(fields[1], ontology, source, number);
    if (to_lower(a) == to_lower(b)) {
      throw DataError(source, number, "'" + a + "' cannot be paired with itself");
    }
    for (const std::string& member : {a, b}) {
      if (!used.insert(to_lower(member)).second) {
        throw DataError(source, number, "'" + member + "' already belongs to a pair");
      }
    }
    pairing.pairs.emplace_back(std::move(a), std::move(b));
  });
  return pairing;
}

std::set<std::string> load_negation_cues(const std::filesystem::path& path) {
  return load_with<std::set<std::string>>(path, parse_negation_cues);
}

std::map<std::string, double> load_intensity_map(const std::filesystem::path& path) {
  return load_with<std::map<std::string, double>>(path, parse_intensity_map);
}

AffinityLexicon load_affinity_lexicon(const std::filesystem::path& path,
                                      const EmotionOntology* ontology) {
  return load_with<AffinityLexicon>(path, [&](std::istream& in, const std::string& src) {
    return parse_affinity_lexicon(in, src, ontology);
  });
}

CounterPairing load_counter_pairing(const std::filesystem::path& path,
                                    const EmotionOntology* ontology) {
  return load_with<CounterPairing>(path, [&](std::istream& in, const std::string& src) {
    return parse_counter_pairing(in, src, ontology);
  });
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path.string(), 0, "cannot open file");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const CounterPairing& CounterPairing::defaults() {
  static const CounterPairing pairing = [] {
    std::istringstream in{std::string(bundled::counter_pairs_text())};
    return parse_counter_pairing(in, "<bundled>/counter_pairs.tsv");
  }();
  return pairing;
}

}  // namespace emodetect
