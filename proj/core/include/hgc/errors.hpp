#pragma once

#include <stdexcept>
#include <string>

namespace hgc {

/// Raised when input data violates a hypergraph invariant at construction time.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is called outside its domain (unknown vertex,
/// disconnected input where connectivity is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an exhaustive computation would exceed its configured size guard.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by verifiers whose hypotheses do not hold; `clause()` names the
/// failed hypothesis so callers can tell the cases apart.
class PreconditionError : public std::logic_error {
 public:
  PreconditionError(std::string clause, const std::string& what)
      : std::logic_error(what), clause_(std::move(clause)) {}

  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

}  // namespace hgc
