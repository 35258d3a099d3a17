#ifndef GALG_ERRORS_HPP
#define GALG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace galg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph files, polynomial files).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A configured enumeration or computation bound was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments of an operation does not hold.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace galg

#endif  // GALG_ERRORS_HPP
