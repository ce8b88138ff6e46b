#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monadic {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula text. `offset` is the byte position in the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t offset)
      : Error("syntax error at offset " + std::to_string(offset) + ": " + msg),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownPredicate : public Error {
 public:
  explicit UnknownPredicate(const std::string& name)
      : Error("unknown predicate '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// A formula uses constructs outside the requested dialect, or an
/// operation does not support the dialect.
class DialectError : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& var)
      : Error("unbound variable '" + var + "'"), var_(var) {}
  const std::string& var() const { return var_; }

 private:
  std::string var_;
};

/// An enumeration or search would exceed the configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, unsigned long long needed,
              unsigned long long cap)
      : Error(what + " needs " + std::to_string(needed) +
              " items, cap is " + std::to_string(cap)) {}
};

/// Malformed model or profile file.
class FormatError : public Error {
 public:
  FormatError(const std::string& msg, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Precondition violation on arguments (bad assignment, infinite count
/// where a finite one is required, mismatched predicate sets, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace monadic
