#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "emodetect/ontology.hpp"
#include "emodetect/scoring.hpp"

namespace emodetect {

struct LabeledDocument {
  std::string label;
  std::string text;
  std::size_t line = 0;
};

/// `label<TAB>text` per line; `#` comments and blank lines skipped. Labels
/// must be primaries of `ontology` or Neutral. An empty corpus is an error.
std::vector<LabeledDocument> parse_corpus(std::istream& in, const std::string& source,
                                          const EmotionOntology& ontology);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  std::size_t support = 0;
};

class EvalReport {
 public:
  /// Classes are the ranked primaries followed by Neutral.
  explicit EvalReport(std::vector<std::string> classes);

  void add(const std::string& gold, const std::string& predicted);

  const std::vector<std::string>& classes() const noexcept { return classes_; }
  std::size_t total() const noexcept { return total_; }
  std::size_t correct() const noexcept { return correct_; }
  double accuracy() const noexcept;
  std::size_t confusion(const std::string& gold, const std::string& predicted) const;
  ClassMetrics metrics(const std::string& label) const;

  std::string to_json() const;
  std::string confusion_text() const;

 private:
  std::size_t index_of(const std::string& label) const;

  std::vector<std::string> classes_;
  std::vector<std::vector<std::size_t>> matrix_;  // [gold][predicted]
  std::size_t total_ = 0;
  std::size_t correct_ = 0;
};

EvalReport evaluate(const std::vector<LabeledDocument>& corpus,
                    const EmotionOntology& ontology, const DetectOptions& options);

}  // namespace emodetect
