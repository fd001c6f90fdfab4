#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fatsep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance or solution text that does not follow the expected format.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A size guard (oracle input limits) was exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace fatsep
