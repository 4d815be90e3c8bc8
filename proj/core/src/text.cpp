#include "emodetect/text.hpp"

#include <cstdint>

namespace emodetect {
namespace {

constexpr char32_t kReplacement = 0xFFFD;

struct CodePoint {
  char32_t value;
  std::size_t byte_begin;
  std::size_t byte_len;
};

// Strict UTF-8 decoding; each invalid byte becomes one U+FFFD.
std::vector<CodePoint> decode(std::string_view text) {
  std::vector<CodePoint> out;
  out.reserve(text.size());
  const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    const unsigned char lead = bytes[i];
    if (lead < 0x80) {
      out.push_back({lead, i, 1});
      ++i;
      continue;
    }
    std::size_t len = 0;
    char32_t cp = 0;
    char32_t min = 0;
    if ((lead & 0xE0) == 0xC0) {
      len = 2, cp = lead & 0x1F, min = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      len = 3, cp = lead & 0x0F, min = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      len = 4, cp = lead & 0x07, min = 0x10000;
    }
    bool ok = len != 0 && i + len <= n;
    for (std::size_t k = 1; ok && k < len; ++k) {
      const unsigned char c = bytes[i + k];
      if ((c & 0xC0) != 0x80) {
        ok = false;
      } else {
        cp = (cp << 6) | (c & 0x3F);
      }
    }
    if (ok && (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))) {
      ok = false;
    }
    if (ok) {
      out.push_back({cp, i, len});
      i += len;
    } else {
      out.push_back({kReplacement, i, 1});
      ++i;
    }
  }
  return out;
}

void encode(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool in(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }

bool is_letter(char32_t cp) {
  if (cp < 0x80) return in(cp, 'a', 'z') || in(cp, 'A', 'Z');
  if (cp == 0xAA || cp == 0xB5 || cp == 0xBA) return true;
  if (in(cp, 0xC0, 0x2AF)) return cp != 0xD7 && cp != 0xF7;
  if (in(cp, 0x370, 0x3FF)) {
    return cp != 0x375 && cp != 0x37E && !in(cp, 0x384, 0x385) && cp != 0x387;
  }
  if (in(cp, 0x400, 0x52F)) return !in(cp, 0x482, 0x489);
  return in(cp, 0x531, 0x556) || in(cp, 0x561, 0x587) ||  // Armenian
         in(cp, 0x5D0, 0x5EA) ||                          // Hebrew
         in(cp, 0x620, 0x64A) ||                          // Arabic
         in(cp, 0x1E00, 0x1EFF) ||                        // Latin Ext. Additional
         in(cp, 0x3041, 0x3096) || in(cp, 0x30A1, 0x30FA) ||
         in(cp, 0x4E00, 0x9FFF) ||                        // CJK unified
         in(cp, 0xAC00, 0xD7A3);                          // Hangul
}

bool is_digit(char32_t cp) { return in(cp, '0', '9'); }

bool is_word_char(char32_t cp) { return is_letter(cp) || is_digit(cp); }

bool is_joiner(char32_t cp) { return cp == '\'' || cp == '-'; }

bool is_terminator(char32_t cp) { return cp == '.' || cp == '!' || cp == '?'; }

char32_t lower(char32_t cp) {
  if (cp < 0x80) return in(cp, 'A', 'Z') ? cp + 32 : cp;
  if (in(cp, 0xC0, 0xDE) && cp != 0xD7) return cp + 32;
  if (in(cp, 0x100, 0x17F)) {
    if (cp == 0x130) return 'i';
    if (cp == 0x178) return 0xFF;
    if (in(cp, 0x139, 0x148) || in(cp, 0x179, 0x17E)) {
      return (cp % 2 == 1) ? cp + 1 : cp;
    }
    if (cp == 0x131 || cp == 0x138 || cp == 0x149 || cp == 0x17F) return cp;
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if (in(cp, 0x391, 0x3A9) && cp != 0x3A2) return cp + 32;
  if (cp == 0x386) return 0x3AC;
  if (in(cp, 0x388, 0x38A)) return cp + 37;
  if (cp == 0x38C) return 0x3CC;
  if (in(cp, 0x38E, 0x38F)) return cp + 63;
  if (in(cp, 0x400, 0x40F)) return cp + 80;
  if (in(cp, 0x410, 0x42F)) return cp + 32;
  if (in(cp, 0x460, 0x481) || in(cp, 0x48A, 0x4BF) || in(cp, 0x4D0, 0x52F)) {
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if (cp == 0x4C0) return 0x4CF;
  if (in(cp, 0x4C1, 0x4CE)) return (cp % 2 == 1) ? cp + 1 : cp;
  if (in(cp, 0x531, 0x556)) return cp + 48;
  if (cp == 0x1E9E) return 0xDF;
  if (in(cp, 0x1E00, 0x1E95) || in(cp, 0x1EA0, 0x1EFF)) {
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  return cp;
}

}  // namespace

std::string to_lower(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  for (const CodePoint& cp : decode(utf8)) {
    if (cp.value == kReplacement) {
      // keep invalid bytes as they were
      out.append(utf8.substr(cp.byte_begin, cp.byte_len));
    } else {
      encode(lower(cp.value), out);
    }
  }
  return out;
}

std::vector<Token> tokenize(std::string_view text) {
  const std::vector<CodePoint> cps = decode(text);
  std::vector<Token> tokens;
  std::size_t sentence = 0;
  bool sentence_has_tokens = false;
  bool boundary_pending = false;

  std::size_t i = 0;
  while (i < cps.size()) {
    const char32_t cp = cps[i].value;
    if (!is_word_char(cp)) {
      if (is_terminator(cp) && sentence_has_tokens) boundary_pending = true;
      ++i;
      continue;
    }
    const std::size_t start = i;
    ++i;
    while (i < cps.size()) {
      const char32_t c = cps[i].value;
      if (is_word_char(c)) {
        ++i;
      } else if (is_joiner(c) && is_letter(cps[i - 1].value) &&
                 i + 1 < cps.size() && is_letter(cps[i + 1].value)) {
        i += 2;
      } else {
        break;
      }
    }
    if (boundary_pending) {
      ++sentence;
      boundary_pending = false;
    }
    const std::size_t byte_begin = cps[start].byte_begin;
    const std::size_t byte_end = cps[i - 1].byte_begin + cps[i - 1].byte_len;
    Token tok;
    tok.surface = std::string(text.substr(byte_begin, byte_end - byte_begin));
    tok.normalized = to_lower(tok.surface);
    tok.span = {start, i};
    tok.sentence = sentence;
    tok.index = tokens.size();
    tokens.push_back(std::move(tok));
    sentence_has_tokens = true;
  }
  return tokens;
}

std::vector<TokenRange> split_sentences(std::span<const Token> tokens) {
  std::vector<TokenRange> ranges;
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= tokens.size(); ++i) {
    if (i == tokens.size() || tokens[i].sentence != tokens[begin].sentence) {
      ranges.push_back({begin, i});
      begin = i;
    }
  }
  return ranges;
}

std::string normalize_phrase(std::string_view phrase) {
  std::string out;
  for (const Token& tok : tokenize(phrase)) {
    if (!out.empty()) out.push_back(' ');
    out += tok.normalized;
  }
  return out;
}

}  // namespace emodetect
