#pragma once

#include <stdexcept>
#include <string>

namespace mmk {

/// Input outside the domain of an operation (bad level, out-of-range label, shape mismatch).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A quantity that must be an integer was not (Verlinde residue, negative coefficient).
class IntegralityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A singular value fell in the band where the rank decision is ambiguous.
class ConditioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No Dynkin diagram (or pair) matches the diagonal of an invariant.
class LabelingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bounded search ran out of budget before reaching a decision.
class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations of classification data disagree.
class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mmk
