#include "emodetect/ontology.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <sstream>

#include "emodetect/bundled.hpp"
#include "emodetect/text.hpp"

namespace emodetect {
namespace {

std::string format_location(const std::string& source, std::size_t line,
                            const std::string& message) {
  if (line == 0) return source + ": " + message;
  return source + ":" + std::to_string(line) + ": " + message;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_trimmed(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.emplace_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

bool valid_name(std::string_view name) {
  if (name.empty() || name.back() == ' ') return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin(), name.end(),
                     [&](char c) { return alpha(c) || c == ' '; });
}

std::size_t count_tokens(std::string_view phrase) {
  return static_cast<std::size_t>(std::count(phrase.begin(), phrase.end(), ' ')) + 1;
}

}  // namespace

DataError::DataError(std::string source, std::size_t line, const std::string& message)
    : std::runtime_error(format_location(source, line, message)),
      source_(std::move(source)),
      line_(line),
      detail_(message) {}

OntologyError::OntologyError(Kind kind, std::string source, std::size_t line,
                             const std::string& message)
    : DataError(std::move(source), line,
                std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

std::string_view to_string(OntologyError::Kind kind) {
  switch (kind) {
    case OntologyError::Kind::duplicate_name: return "DuplicateName";
    case OntologyError::Kind::duplicate_keyword: return "DuplicateKeyword";
    case OntologyError::Kind::depth_exceeded: return "DepthExceeded";
    case OntologyError::Kind::orphan_path: return "OrphanPath";
    case OntologyError::Kind::malformed_line: return "MalformedLine";
  }
  return "OntologyError";
}

std::size_t canonical_rank(std::string_view name) {
  const std::string lowered = to_lower(name);
  for (std::size_t i = 0; i < kCanonicalOrder.size(); ++i) {
    if (to_lower(kCanonicalOrder[i]) == lowered) return i;
  }
  return kCanonicalOrder.size();
}

// OntologyBuilder

OntologyBuilder::OntologyBuilder(std::string source) : source_(std::move(source)) {}

void OntologyBuilder::fail(OntologyError::Kind kind, std::size_t line,
                           const std::string& message) const {
  throw OntologyError(kind, source_, line, message);
}

NodeId OntologyBuilder::add(std::span<const std::string> path,
                            std::span<const std::string> keywords,
                            std::size_t line) {
  using Kind = OntologyError::Kind;
  if (path.empty()) fail(Kind::malformed_line, line, "empty path");
  if (path.size() > static_cast<std::size_t>(kMaxDepth)) {
    fail(Kind::depth_exceeded, line,
         "path has " + std::to_string(path.size()) + " segments, at most " +
             std::to_string(kMaxDepth) + " allowed");
  }
  for (const std::string& segment : path) {
    if (!valid_name(segment)) {
      fail(Kind::malformed_line, line, "invalid class name '" + segment + "'");
    }
  }

  const std::string& name = path.back();
  const std::string key = to_lower(name);
  if (auto it = by_name_.find(key); it != by_name_.end()) {
    fail(Kind::duplicate_name, line,
         "class '" + name + "' already declared as '" +
             nodes_[it->second.value].name + "'");
  }

  std::optional<NodeId> parent;
  if (path.size() > 1) {
    auto it = by_name_.find(to_lower(path[path.size() - 2]));
    // The whole ancestor chain has to match, not just the immediate parent.
    bool matches = it != by_name_.end() &&
                   nodes_[it->second.value].depth == static_cast<int>(path.size()) - 1;
    std::optional<NodeId> cursor;
    if (matches) cursor = it->second;
    for (std::size_t k = path.size() - 1; matches && k-- > 0;) {
      matches = to_lower(nodes_[cursor->value].name) == to_lower(path[k]);
      cursor = nodes_[cursor->value].parent;
    }
    if (!matches) {
      std::string prefix;
      for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        if (k) prefix += '/';
        prefix += path[k];
      }
      fail(Kind::orphan_path, line, "parent path '" + prefix + "' not declared");
    }
    parent = it->second;
  } else if (primaries_.size() >= kMaxPrimaries) {
    fail(Kind::malformed_line, line,
         "more than " + std::to_string(kMaxPrimaries) + " primary classes");
  }

  std::vector<std::string> phrases;
  phrases.push_back(normalize_phrase(key));
  if (count_tokens(phrases.front()) > kMaxKeywordTokens) {
    fail(Kind::malformed_line, line, "class name '" + name + "' is longer than " +
                                         std::to_string(kMaxKeywordTokens) + " words");
  }
  for (const std::string& kw : keywords) {
    if (kw.empty()) fail(Kind::malformed_line, line, "empty keyword");
    if (to_lower(kw) != kw) {
      fail(Kind::malformed_line, line, "keyword '" + kw + "' is not lowercase");
    }
    if (normalize_phrase(kw) != kw) {
      fail(Kind::malformed_line, line,
           "keyword '" + kw + "' is not a single-spaced sequence of words");
    }
    if (count_tokens(kw) > kMaxKeywordTokens) {
      fail(Kind::malformed_line, line,
           "keyword '" + kw + "' has more than " +
               std::to_string(kMaxKeywordTokens) + " words");
    }
    if (std::find(phrases.begin(), phrases.end(), kw) == phrases.end()) {
      phrases.push_back(kw);
    }
  }
  for (const std::string& phrase : phrases) {
    if (auto it = by_keyword_.find(phrase); it != by_keyword_.end()) {
      fail(Kind::duplicate_keyword, line,
           "keyword '" + phrase + "' of '" + name + "' already belongs to '" +
               nodes_[it->second.value].name + "'");
    }
  }

  const NodeId id{static_cast<std::uint32_t>(nodes_.size())};
  EmotionNode node;
  node.name = name;
  node.depth = static_cast<int>(path.size());
  node.parent = parent;
  node.keywords = std::move(phrases);
  for (const std::string& phrase : node.keywords) by_keyword_.emplace(phrase, id);
  by_name_.emplace(key, id);
  if (parent) {
    nodes_[parent->value].children.push_back(id);
  } else {
    primaries_.push_back(id);
  }
  nodes_.push_back(std::move(node));
  return id;
}

void OntologyBuilder::add_line(std::string_view raw, std::size_t line_number) {
  const std::string_view line = trim(raw);
  if (line.empty() || line.front() == '#') return;

  const auto colon = line.find(':');
  const std::vector<std::string> path = split_trimmed(line.substr(0, colon), '/');
  std::vector<std::string> keywords;
  if (colon != std::string_view::npos) {
    const std::string_view rest = trim(line.substr(colon + 1));
    if (!rest.empty()) keywords = split_trimmed(rest, ',');
  }
  add(path, keywords, line_number);
}

EmotionOntology OntologyBuilder::build() && {
  EmotionOntology ontology;
  ontology.nodes_ = std::move(nodes_);
  ontology.primaries_ = std::move(primaries_);
  ontology.by_name_ = std::move(by_name_);
  ontology.by_keyword_ = std::move(by_keyword_);

  ontology.ranked_primaries_ = ontology.primaries_;
  std::stable_sort(ontology.ranked_primaries_.begin(), ontology.ranked_primaries_.end(),
                   [&](NodeId a, NodeId b) {
                     return canonical_rank(ontology.node(a).name) <
                            canonical_rank(ontology.node(b).name);
                   });
  for (const auto& [phrase, id] : ontology.by_keyword_) {
    ontology.max_keyword_tokens_ =
        std::max(ontology.max_keyword_tokens_, count_tokens(phrase));
  }
  return ontology;
}

// EmotionOntology

EmotionOntology EmotionOntology::parse(std::istream& in, std::string source) {
  OntologyBuilder builder(std::move(source));
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) builder.add_line(line, ++number);
  return std::move(builder).build();
}

EmotionOntology EmotionOntology::parse(std::string_view text, std::string source) {
  std::istringstream in{std::string(text)};
  return parse(in, std::move(source));
}

EmotionOntology EmotionOntology::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string(), 0, "cannot open ontology file");
  return parse(in, path.string());
}

const EmotionOntology& EmotionOntology::bundled() {
  static const EmotionOntology instance =
      parse(bundled::ontology_text(), "<bundled>/parrott.ont");
  return instance;
}

std::optional<NodeId> EmotionOntology::find(std::string_view name) const {
  if (auto it = by_name_.find(to_lower(name)); it != by_name_.end()) return it->second;
  return std::nullopt;
}

NodeId EmotionOntology::primary_of(NodeId id) const {
  while (const auto& parent = node(id).parent) id = *parent;
  return id;
}

std::optional<NodeId> EmotionOntology::keyword_owner(std::string_view phrase) const {
  if (auto it = by_keyword_.find(std::string(phrase)); it != by_keyword_.end()) {
    return it->second;
  }
  return std::nullopt;
}

std::string EmotionOntology::path_of(NodeId id) const {
  std::string path = node(id).name;
  while (const auto& parent = node(id).parent) {
    id = *parent;
    path = node(id).name + "/" + path;
  }
  return path;
}

std::string EmotionOntology::serialize() const {
  std::string out;
  for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
    const EmotionNode& n = nodes_[i];
    out += path_of(NodeId{i});
    for (std::size_t k = 1; k < n.keywords.size(); ++k) {
      out += (k == 1) ? ": " : ", ";
      out += n.keywords[k];
    }
    out += '\n';
  }
  return out;
}

std::vector<NodeId> bfs_traverse(const EmotionOntology& ontology) {
  std::vector<NodeId> order;
  order.reserve(ontology.size());
  std::deque<NodeId> queue(ontology.primaries().begin(), ontology.primaries().end());
  while (!queue.empty()) {
    const NodeId id = queue.front();
    queue.pop_front();
    order.push_back(id);
    for (NodeId child : ontology.node(id).children) queue.push_back(child);
  }
  return order;
}

}  // namespace emodetect
