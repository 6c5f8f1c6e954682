#pragma once

#include <stdexcept>
#include <string>

namespace mtasep {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad lengths, weights, multiplicities or textual forms.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A multiplicity with some m_i = 0.
class NonBasicSector : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An enumeration or matrix size over the configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, unsigned long long required, unsigned long long budget)
      : Error(what + ": sector too large (" + std::to_string(required) + " > budget " +
              std::to_string(budget) + ")"),
        required_(required),
        budget_(budget) {}

  unsigned long long required() const noexcept { return required_; }
  unsigned long long budget() const noexcept { return budget_; }

 private:
  unsigned long long required_;
  unsigned long long budget_;
};

/// Trace of an element with a surviving unit coefficient.
class DivergentTrace : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold on valid input failed; signals a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace mtasep
