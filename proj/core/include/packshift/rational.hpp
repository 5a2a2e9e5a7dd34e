#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace packshift {

// Thrown when a value leaves the exactly-representable range (numerator or
// denominator would exceed 64 bits after reduction).
class RationalOverflow : public std::overflow_error {
 public:
  explicit RationalOverflow(const std::string& what) : std::overflow_error(what) {}
};

class RationalParseError : public std::invalid_argument {
 public:
  explicit RationalParseError(const std::string& what) : std::invalid_argument(what) {}
};

// Exact rational number with 64-bit numerator/denominator, canonical form
// (reduced, denominator > 0). Arithmetic goes through 128-bit intermediates,
// so cross-multiplied comparisons never overflow; results that do not fit
// back into 64 bits throw RationalOverflow instead of silently degrading.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
  Rational(std::int64_t n, std::int64_t d);

  static Rational reduce128(__int128 n, __int128 d);
  // 2^e for |e| <= 62.
  static Rational pow2(int e);
  // Accepts "p/q", decimal strings like "0.35", and plain integers.
  static Rational parse(std::string_view text);

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_zero() const { return num_ == 0; }
  constexpr bool is_negative() const { return num_ < 0; }
  constexpr bool is_integer() const { return den_ == 1; }

  std::int64_t floor() const;
  std::int64_t ceil() const;

  Rational operator-() const { return Rational(raw{}, -num_, den_); }
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  constexpr bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  std::strong_ordering operator<=>(const Rational& o) const {
    __int128 lhs = static_cast<__int128>(num_) * o.den_;
    __int128 rhs = static_cast<__int128>(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "p" when integral, otherwise "p/q".
  std::string str() const;

 private:
  struct raw {};  // tag: trusted, already-canonical input
  constexpr Rational(raw, std::int64_t n, std::int64_t d) : num_(n), den_(d) {}

  std::int64_t num_;
  std::int64_t den_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }
inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::string to_string(const Rational& r);

}  // namespace packshift
