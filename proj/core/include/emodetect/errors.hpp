#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace emodetect {

/// Failure while reading an input data file (ontology, lexicon, corpus).
/// what() is formatted as "source:line: message" so it can go straight to
/// the error stream.
class DataError : public std::runtime_error {
 public:
  DataError(std::string source, std::size_t line, const std::string& message);

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string source_;
  std::size_t line_;
  std::string detail_;
};

}  // namespace emodetect
