#ifndef TSIM_ERROR_HPP
#define TSIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tsim {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. Carries "source:line:" context when available.
class ParseError : public Error {
 public:
  using Error::Error;
  ParseError(const std::string& source, int line, const std::string& message)
      : Error(source + ":" + std::to_string(line) + ": " + message) {}
};

// Structurally invalid argument (unknown node, disconnected pattern, ...).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Request outside the supported feature set (e.g. a quantifier form the
// engine deliberately rejects, or a semantics that cannot take this input).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Oracle routines refuse inputs beyond their exhaustive-search size guards.
class OversizeError : public Error {
 public:
  using Error::Error;
};

// Broken internal invariant; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tsim

#endif
