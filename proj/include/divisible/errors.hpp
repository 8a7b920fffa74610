#pragma once

#include <stdexcept>
#include <string>

namespace divisible {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  BudgetExceeded,
  NotInClass,
  DegenerateClique,
  TheoremViolation,
  Seagull,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorKind::InvalidArgument, what) {}
};

/// Raised when an exact search would exceed its configured size or time budget.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error(ErrorKind::BudgetExceeded, what) {}
};

/// Two-division is undefined for graphs without an edge.
class DegenerateClique : public Error {
 public:
  explicit DegenerateClique(const std::string& what) : Error(ErrorKind::DegenerateClique, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

}  // namespace divisible
