#pragma once

#include <stdexcept>
#include <string>

namespace boxvas {

// Exit-code mapping used by the CLI: usage 2, precondition 3, resource 4,
// internal 5.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedPathError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct UnsupportedDimensionError : PreconditionError {
  using PreconditionError::PreconditionError;
};

// reach(V) = {0}, a one-dimensional system routed elsewhere, or similar.
struct DegenerateSystemError : PreconditionError {
  using PreconditionError::PreconditionError;
};

// Case-2 targets that are not deep need an N-path, not just coefficients.
struct EvidenceInsufficientError : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct ResourceError : Error {
  using Error::Error;
};

// A guaranteed postcondition failed. Either a bug or a falsified hypothesis
// (for example a deep-in-the-cone constant that is too small).
struct InternalError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(int line, const std::string& msg)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line(line) {}
  int line;
};

}  // namespace boxvas
