#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace negraph {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data (CoNLL-U, rule file, lexicon, gold annotations).
// line is 1-based within the offending stream.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Pattern source rejected by the lexer/parser; offset is a byte position
// into the pattern string.
class PatternSyntaxError : public Error {
 public:
  PatternSyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace negraph
