#pragma once

#include <stdexcept>
#include <string>

namespace coxcay {

// Malformed input document. Carries the first offending line number.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
};

// Violated precondition or invalid value at the API level.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configurable cap was exceeded (instance too large, not wrong).
struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configuration could not be realized as a ball automorphism.
struct SynthesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace coxcay
