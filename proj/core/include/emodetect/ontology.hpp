#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "emodetect/errors.hpp"

namespace emodetect {

/// Tie-breaking and serialization order of the six primary classes.
inline constexpr std::array<std::string_view, 6> kCanonicalOrder = {
    "Love", "Joy", "Anger", "Sadness", "Fear", "Surprise"};

inline constexpr int kMaxDepth = 3;
inline constexpr std::size_t kMaxPrimaries = 6;
inline constexpr std::size_t kMaxKeywordTokens = 4;

/// Position of `name` in kCanonicalOrder (case-insensitive), or
/// kCanonicalOrder.size() when it is not one of the six.
std::size_t canonical_rank(std::string_view name);

enum class Level { primary = 1, secondary = 2, tertiary = 3 };

struct NodeId {
  std::uint32_t value = 0;

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

struct EmotionNode {
  std::string name;
  int depth = 1;
  std::optional<NodeId> parent;
  std::vector<NodeId> children;
  /// Normalized keyword phrases in declaration order; keywords[0] is the
  /// lowercased node name.
  std::vector<std::string> keywords;

  Level level() const noexcept { return static_cast<Level>(depth); }
  bool is_primary() const noexcept { return !parent.has_value(); }

  friend bool operator==(const EmotionNode&, const EmotionNode&) = default;
};

class OntologyError : public DataError {
 public:
  enum class Kind {
    duplicate_name,
    duplicate_keyword,
    depth_exceeded,
    orphan_path,
    malformed_line,
  };

  OntologyError(Kind kind, std::string source, std::size_t line,
                const std::string& message);

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

std::string_view to_string(OntologyError::Kind kind);

class EmotionOntology;

/// Incremental, validating construction of an ontology. Each add() call
/// corresponds to one line of the ontology file format and throws
/// OntologyError on the first violation.
class OntologyBuilder {
 public:
  explicit OntologyBuilder(std::string source = "<ontology>");

  /// `path` is the list of names from the primary down to the new node.
  NodeId add(std::span<const std::string> path,
             std::span<const std::string> keywords, std::size_t line = 0);

  /// Parses a single `Path[: kw, ...]` line. Blank and comment lines are
  /// ignored.
  void add_line(std::string_view line, std::size_t line_number);

  EmotionOntology build() &&;

 private:
  [[noreturn]] void fail(OntologyError::Kind kind, std::size_t line,
                         const std::string& message) const;

  std::string source_;
  std::vector<EmotionNode> nodes_;
  std::vector<NodeId> primaries_;
  std::unordered_map<std::string, NodeId> by_name_;
  std::unordered_map<std::string, NodeId> by_keyword_;
};

/// Immutable three-level forest of emotion classes.
class EmotionOntology {
 public:
  static EmotionOntology parse(std::istream& in,
                               std::string source = "<ontology>");
  static EmotionOntology parse(std::string_view text,
                               std::string source = "<ontology>");
  static EmotionOntology load_file(const std::filesystem::path& path);
  /// The Parrott taxonomy compiled into the library.
  static const EmotionOntology& bundled();

  std::size_t size() const noexcept { return nodes_.size(); }
  std::span<const EmotionNode> nodes() const noexcept { return nodes_; }
  const EmotionNode& node(NodeId id) const { return nodes_.at(id.value); }

  /// Primaries in file order.
  std::span<const NodeId> primaries() const noexcept { return primaries_; }
  /// Primaries sorted by canonical rank, unknown names last in file order.
  std::span<const NodeId> ranked_primaries() const noexcept {
    return ranked_primaries_;
  }

  std::optional<NodeId> find(std::string_view name) const;
  NodeId primary_of(NodeId id) const;
  /// Node owning the normalized keyword phrase, if any.
  std::optional<NodeId> keyword_owner(std::string_view phrase) const;
  /// Longest keyword length in tokens.
  std::size_t max_keyword_tokens() const noexcept { return max_keyword_tokens_; }

  /// Full slash-separated path of a node, e.g. "Love/Affection/Adoration".
  std::string path_of(NodeId id) const;

  /// Writes the ontology back in the file format; parse(serialize())
  /// reproduces an equal ontology.
  std::string serialize() const;

  friend bool operator==(const EmotionOntology& a, const EmotionOntology& b) {
    return a.nodes_ == b.nodes_ && a.primaries_ == b.primaries_;
  }

 private:
  friend class OntologyBuilder;
  EmotionOntology() = default;

  std::vector<EmotionNode> nodes_;
  std::vector<NodeId> primaries_;
  std::vector<NodeId> ranked_primaries_;
  std::unordered_map<std::string, NodeId> by_name_;
  std::unordered_map<std::string, NodeId> by_keyword_;
  std::size_t max_keyword_tokens_ = 1;
};

/// Breadth-first order: primaries in file order, then every depth-2 node,
/// then every depth-3 node; siblings keep declaration order.
std::vector<NodeId> bfs_traverse(const EmotionOntology& ontology);

}  // namespace emodetect
