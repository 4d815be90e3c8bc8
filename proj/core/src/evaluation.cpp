#include "emodetect/evaluation.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "emodetect/report.hpp"
#include "emodetect/text.hpp"

namespace emodetect {

std::vector<LabeledDocument> parse_corpus(std::istream& in, const std::string& source,
                                          const EmotionOntology& ontology) {
  std::vector<LabeledDocument> corpus;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw DataError(source, number, "malformed corpus line, expected label<TAB>text");
    }
    std::string label = line.substr(0, tab);
    label.erase(0, label.find_first_not_of(' '));
    label.erase(label.find_last_not_of(' ') + 1);
    if (to_lower(label) == to_lower(kNeutral)) {
      label = std::string(kNeutral);
    } else if (const auto id = ontology.find(label);
               id && ontology.node(*id).is_primary()) {
      label = ontology.node(*id).name;
    } else {
      throw DataError(source, number, "malformed corpus line, unknown label '" +
                                          label + "'");
    }
    corpus.push_back({std::move(label), line.substr(tab + 1), number});
  }
  if (corpus.empty()) throw DataError(source, 0, "empty corpus");
  return corpus;
}

EvalReport::EvalReport(std::vector<std::string> classes)
    : classes_(std::move(classes)),
      matrix_(classes_.size(), std::vector<std::size_t>(classes_.size(), 0)) {}

std::size_t EvalReport::index_of(const std::string& label) const {
  const auto it = std::find(classes_.begin(), classes_.end(), label);
  if (it == classes_.end()) throw std::invalid_argument("unknown class '" + label + "'");
  return static_cast<std::size_t>(it - classes_.begin());
}

void EvalReport::add(const std::string& gold, const std::string& predicted) {
  const std::size_t g = index_of(gold);
  const std::size_t p = index_of(predicted);
  ++matrix_[g][p];
  ++total_;
  if (g == p) ++correct_;
}

double EvalReport::accuracy() const noexcept {
  return total_ == 0 ? 0.0 : static_cast<double>(correct_) / static_cast<double>(total_);
}

std::size_t EvalReport::confusion(const std::string& gold,
                                  const std::string& predicted) const {
  return matrix_[index_of(gold)][index_of(predicted)];
}

ClassMetrics EvalReport::metrics(const std::string& label) const {
  const std::size_t i = index_of(label);
  std::size_t predicted = 0;
  for (const auto& row : matrix_) predicted += row[i];
  ClassMetrics m;
  for (std::size_t count : matrix_[i]) m.support += count;
  const auto tp = static_cast<double>(matrix_[i][i]);
  m.precision = predicted == 0 ? 0.0 : tp / static_cast<double>(predicted);
  m.recall = m.support == 0 ? 0.0 : tp / static_cast<double>(m.support);
  return m;
}

std::string EvalReport::to_json() const {
  nlohmann::ordered_json j;
  j["total"] = total_;
  j["correct"] = correct_;
  j["accuracy"] = format_decimal(accuracy());
  j["per_class"] = nlohmann::ordered_json::object();
  for (const std::string& label : classes_) {
    const ClassMetrics m = metrics(label);
    nlohmann::ordered_json c;
    c["precision"] = format_decimal(m.precision);
    c["recall"] = format_decimal(m.recall);
    c["support"] = m.support;
    j["per_class"][label] = std::move(c);
  }
  j["confusion"]["labels"] = classes_;
  j["confusion"]["rows"] = matrix_;
  return j.dump();
}

std::string EvalReport::confusion_text() const {
  std::size_t width = std::string_view("gold \\ predicted").size();
  for (const std::string& label : classes_) width = std::max(width, label.size());
  std::size_t cell = 0;
  for (const std::string& label : classes_) cell = std::max(cell, label.size());
  cell += 2;

  auto pad_left = [](const std::string& s, std::size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
  };
  std::ostringstream out;
  out << "gold \\ predicted" << std::string(width - 16, ' ');
  for (const std::string& label : classes_) out << pad_left(label, cell);
  out << '\n';
  for (std::size_t g = 0; g < classes_.size(); ++g) {
    out << classes_[g] << std::string(width - classes_[g].size(), ' ');
    for (std::size_t count : matrix_[g]) out << pad_left(std::to_string(count), cell);
    out << '\n';
  }
  out << "accuracy " << format_decimal(accuracy()) << " (" << correct_ << '/' << total_
      << ")\n";
  return out.str();
}

EvalReport evaluate(const std::vector<LabeledDocument>& corpus,
                    const EmotionOntology& ontology, const DetectOptions& options) {
  std::vector<std::string> classes;
  for (NodeId id : ontology.ranked_primaries()) classes.push_back(ontology.node(id).name);
  classes.emplace_back(kNeutral);

  EvalReport report(std::move(classes));
  for (const LabeledDocument& doc : corpus) {
    report.add(doc.label, detect(doc.text, ontology, options).label);
  }
  return report;
}

}  // namespace emodetect
