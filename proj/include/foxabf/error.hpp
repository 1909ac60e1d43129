#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace foxabf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad index, n < 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `token()` is 1-based, `offset()` is the byte
/// offset of the offending token in the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t token, std::size_t offset)
      : Error(what), token_(token), offset_(offset) {}

  std::size_t token() const noexcept { return token_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t token_;
  std::size_t offset_;
};

/// An exact identity that must hold by construction did not. Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace foxabf
