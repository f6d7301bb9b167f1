#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permsum {

// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or violated operation precondition (CLI exit code 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Instance fails the multiplicity hypothesis required by witness search.
class HypothesisError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Requested computation exceeds the configured state budget (CLI exit code 3).
class BudgetError : public Error {
 public:
  using Error::Error;
};

// A checked mathematical property failed on a concrete instance
// (CLI exit code 1; the instance is the counterexample).
class ViolationError : public Error {
 public:
  using Error::Error;
};

class LemmaViolationError : public ViolationError {
 public:
  LemmaViolationError(std::string msg, std::uint32_t x, std::uint32_t y)
      : ViolationError(std::move(msg)), x(x), y(y) {}
  std::uint32_t x;
  std::uint32_t y;
};

// Prefix sumset chain failed to reach the whole group after the fallback
// factorization; carries the diagnostic state as text.
class IncompleteError : public ViolationError {
 public:
  using ViolationError::ViolationError;
};

}  // namespace permsum
