#include "fog/grade.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace fog {

Grade::Grade(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("grade denominator must be nonzero");
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  if (numerator < 0 || numerator > denominator) {
    throw std::invalid_argument("grade out of [0,1]");
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Grade Grade::one() { return Grade(1, 1); }

Grade operator*(const Grade& a, const Grade& b) {
  // Cross-reduce before multiplying so typical products never overflow.
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  std::int64_t num = 0;
  std::int64_t den = 0;
  if (__builtin_mul_overflow(a.num_ / g1, b.num_ / g2, &num) ||
      __builtin_mul_overflow(a.den_ / g2, b.den_ / g1, &den)) {
    throw std::overflow_error("grade product overflows 64-bit components");
  }
  return Grade(num, den);
}

std::string Grade::str() const {
  if (num_ == 0) return "0";
  if (num_ == den_) return "1";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw std::invalid_argument("malformed grade '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Grade Grade::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Grade(parse_int(text), 1);
  }
  const std::int64_t num = parse_int(text.substr(0, slash));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("grade denominator must be nonzero");
  }
  return Grade(num, den);
}

}  // namespace fog
