#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fog/errors.hpp"

namespace fog {

// Carrier sizes are capped so that pair sets and the brute-force oracles
// stay tractable, and so an order row fits in one 64-bit mask.
inline constexpr int kMaxElements = 64;

// Unvalidated input tables for a finite ordered groupoid. mul[x][y] is the
// index of x*y; leq[a][b] means a <= b.
struct RawStructure {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> mul;
  std::vector<std::vector<bool>> leq;

  friend bool operator==(const RawStructure&, const RawStructure&) = default;
};

struct AxiomViolation {
  std::string axiom;          // reflexive | antisymmetric | transitive |
                              // compatible-right | compatible-left
  std::vector<int> elements;  // witness indices, in the axiom's role order

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<AxiomViolation> violations;
};

// Raised when constructing a Groupoid from tables that fail validation.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string message, ValidationReport report)
      : std::runtime_error(std::move(message)), report(std::move(report)) {}

  ValidationReport report;
};

// Checks the partial-order axioms and compatibility of the multiplication
// with the order. Throws StructuralError on malformed tables (wrong
// dimensions, out-of-range entries, bad labels); axiom failures are
// reported, one witness per violated axiom.
ValidationReport validate(const RawStructure& raw);

// Warshall closure; input may be any relation. The result is reflexive and
// transitive but need not be antisymmetric - validate() decides that.
std::vector<std::vector<bool>> reflexive_transitive_closure(
    std::vector<std::vector<bool>> rel);

// A validated finite ordered groupoid. Immutable after construction and
// safe to share across threads.
class Groupoid {
 public:
  // Throws StructuralError or ValidationError.
  explicit Groupoid(RawStructure raw);

  int size() const { return n_; }
  const std::string& label(int x) const { return raw_.labels[x]; }
  int mul(int x, int y) const { return mul_[x * n_ + y]; }
  bool leq(int a, int b) const { return (up_[a] >> b) & 1u; }

  // Bitmask of {b : a <= b}.
  std::uint64_t up_set(int a) const { return up_[a]; }
  // Bitmask of {a : a <= b}.
  std::uint64_t down_set(int b) const { return down_[b]; }

  const RawStructure& raw() const { return raw_; }

  friend bool operator==(const Groupoid& a, const Groupoid& b) {
    return a.raw_ == b.raw_;
  }

 private:
  int n_ = 0;
  RawStructure raw_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint64_t> up_;
  std::vector<std::uint64_t> down_;
};

bool is_associative(const Groupoid& s);

// The unique top element under <=, if the order has one.
std::optional<int> greatest_element(const Groupoid& s);

// All (x, y) with a <= x*y, in lexicographic order.
std::vector<std::pair<int, int>> pairs_above(const Groupoid& s, int a);

}  // namespace fog
