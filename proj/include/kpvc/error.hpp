#pragma once

#include <stdexcept>
#include <string>

namespace kpvc {

// Error categories double as CLI exit codes.
enum class ErrorKind : int {
  precondition = 2,
  parse = 3,
  oracle_too_large = 4,
  verification = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::precondition, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::parse, what) {}
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + what) {}
};

class OracleTooLarge : public Error {
 public:
  explicit OracleTooLarge(const std::string& what)
      : Error(ErrorKind::oracle_too_large, what) {}
};

class VerificationError : public Error {
 public:
  explicit VerificationError(const std::string& what)
      : Error(ErrorKind::verification, what) {}
};

}  // namespace kpvc
