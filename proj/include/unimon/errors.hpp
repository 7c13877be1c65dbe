#pragma once

#include <stdexcept>

namespace unimon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for inputs that do not describe a well-formed object at all.
class InputError : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public InputError {
 public:
  using InputError::InputError;
};

class BadPosition : public InputError {
 public:
  using InputError::InputError;
};

class NegativeEntry : public InputError {
 public:
  using InputError::InputError;
};

class BadPattern : public InputError {
 public:
  using InputError::InputError;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

// Raised when a structurally sound input violates a mathematical requirement.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class OutOfPattern : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IdentityGap : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IdentityGenerator : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class GeneratorOutOfPattern : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class GroupMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class Mismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class PivotNotInMonoid : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class EmptyGaps : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class EmptyGeneratorSet : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotCofinite : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotStable : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Search exceeded its node budget.
class Infeasible : public Error {
 public:
  using Error::Error;
};

// A generator closure could not certify a finite complement within its window.
class Undecided : public Error {
 public:
  using Error::Error;
};

}  // namespace unimon
