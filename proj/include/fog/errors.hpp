#pragma once

#include <stdexcept>

namespace fog {

// Malformed raw input: wrong table dimensions, out-of-range index, bad
// labels. Distinct from an axiom violation, which is reported through a
// ValidationReport instead of thrown.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller misuse: mixing subsets over different structures, unknown names,
// out-of-range arguments.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed its candidate budget; shrink the grid or the
// structure and retry.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fog
