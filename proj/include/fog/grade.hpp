#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fog {

// Membership grade: an exact rational in [0, 1], stored in lowest terms
// with a positive denominator. Comparisons cross-multiply in 128 bits and
// are exact for all representable values; no floating point anywhere.
class Grade {
 public:
  constexpr Grade() = default;

  // Throws std::invalid_argument if denominator is zero or the value lies
  // outside [0, 1].
  Grade(std::int64_t numerator, std::int64_t denominator);

  static Grade zero() { return {}; }
  static Grade one();

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == den_; }

  // Lowest terms make field-wise equality exact.
  friend bool operator==(const Grade&, const Grade&) = default;

  friend std::strong_ordering operator<=>(const Grade& a, const Grade& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Product of two grades stays in [0, 1]. Throws std::overflow_error if
  // the reduced result does not fit in 64-bit components.
  friend Grade operator*(const Grade& a, const Grade& b);

  // "0" and "1" print bare, everything else as "p/q" in lowest terms.
  std::string str() const;

  // Accepts "p" or "p/q" with nonnegative decimal integers. Throws
  // std::invalid_argument on malformed text or a value outside [0, 1].
  static Grade parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Grade min(const Grade& a, const Grade& b) { return b < a ? b : a; }
inline Grade max(const Grade& a, const Grade& b) { return a < b ? b : a; }

}  // namespace fog
