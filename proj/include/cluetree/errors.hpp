#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cluetree {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Token could not be normalized (empty, internal whitespace, reserved form).
struct NormalizeError : Error {
  using Error::Error;
};

// Malformed corpus or marginals line; `line` is 1-based.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
  std::size_t line;
};

// Malformed tree text; `offset` is the 0-based byte offset of the problem.
struct TreeParseError : Error {
  TreeParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " (offset " + std::to_string(offset) + ")"), offset(offset) {}
  std::size_t offset;
};

struct VocabularyError : Error {
  using Error::Error;
};

struct SynthesisError : Error {
  using Error::Error;
};

struct SplitError : Error {
  using Error::Error;
};

struct EvaluationError : Error {
  using Error::Error;
};

struct RuleExtractionError : Error {
  using Error::Error;
};

// Random tree generation cannot proceed (empty vocabulary partition).
struct GenerationError : Error {
  using Error::Error;
};

struct FileError : Error {
  using Error::Error;
};

}  // namespace cluetree
