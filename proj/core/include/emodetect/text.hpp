#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace emodetect {

/// Half-open range of code point offsets into the source text.
struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const CharSpan&, const CharSpan&) = default;
};

struct Token {
  std::string surface;     // exact source bytes
  std::string normalized;  // simple lowercase of surface
  CharSpan span;
  std::size_t sentence = 0;
  std::size_t index = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Half-open range of token indices.
struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  friend bool operator==(const TokenRange&, const TokenRange&) = default;
};

/// Splits UTF-8 text into word tokens.
///
/// A token is a maximal run of letters and digits, where an apostrophe or
/// hyphen flanked by letters on both sides stays inside the word ("don't",
/// "well-being"). Everything else separates tokens. A run of `.`, `!` or `?`
/// ends the current sentence. Invalid UTF-8 bytes act as separators.
std::vector<Token> tokenize(std::string_view text);

/// Groups tokens by sentence index into contiguous ranges covering the list.
std::vector<TokenRange> split_sentences(std::span<const Token> tokens);

/// Per-code-point lowercase with no locale rules (ASCII, Latin-1,
/// Latin Extended-A, Greek and Cyrillic).
std::string to_lower(std::string_view utf8);

/// Normalized tokens of `phrase` joined by single spaces.
std::string normalize_phrase(std::string_view phrase);

}  // namespace emodetect
