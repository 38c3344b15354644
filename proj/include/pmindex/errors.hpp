#pragma once

#include <stdexcept>
#include <string>

namespace pmindex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line number of the offending line
/// (0 when the problem is not tied to a single line, e.g. a missing trailing
/// newline or a short file).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration exceeded its configured cap.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace pmindex
