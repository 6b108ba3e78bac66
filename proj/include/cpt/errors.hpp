#pragma once

#include <stdexcept>

namespace cpt {

/// Raised when an operation is called outside its contract (bad labels,
/// mismatched dimensions, non-central subgroups, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed object violated a structural expectation (wrong closure order,
/// non-group table, failed derivation).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closure grew past its limit; usually a wrong product rule.
class GrowthError : public StructureError {
 public:
  using StructureError::StructureError;
};

}  // namespace cpt
