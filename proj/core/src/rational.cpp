#include "packshift/rational.hpp"

#include <cctype>
#include <limits>

namespace packshift {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr i128 kMaxI64 = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMinI64 = std::numeric_limits<std::int64_t>::min();

}  // namespace

Rational Rational::reduce128(i128 n, i128 d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  u128 g = gcd_u128(uabs(n), u128(d));
  n /= i128(g);
  d /= i128(g);
  if (n > kMaxI64 || n < kMinI64 || d > kMaxI64) {
    throw RationalOverflow("rational out of 64-bit range after reduction");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) { *this = reduce128(n, d); }

Rational Rational::pow2(int e) {
  if (e < -62 || e > 62) throw RationalOverflow("power of two exponent out of range");
  if (e >= 0) return Rational(std::int64_t(1) << e);
  Rational r;
  r.num_ = 1;
  r.den_ = std::int64_t(1) << (-e);
  return r;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

Rational Rational::operator+(const Rational& o) const {
  std::int64_t g = [](std::int64_t a, std::int64_t b) {
    while (b != 0) {
      std::int64_t t = a % b;
      a = b;
      b = t;
    }
    return a;
  }(den_, o.den_);
  std::int64_t db = o.den_ / g;
  i128 n = i128(num_) * db + i128(o.num_) * (den_ / g);
  i128 d = i128(den_) * db;
  return reduce128(n, d);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  return reduce128(i128(num_) * o.num_, i128(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  return reduce128(i128(num_) * o.den_, i128(den_) * o.num_);
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw RationalParseError("cannot parse rational from '" + std::string(text) + "'");
  };
  size_t pos = 0;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    neg = text[pos] == '-';
    ++pos;
  }
  i128 intpart = 0;
  size_t digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    intpart = intpart * 10 + (text[pos] - '0');
    if (intpart > i128(kMaxI64)) return fail();
    ++pos;
    ++digits;
  }
  if (digits == 0) return fail();
  if (pos == text.size()) {
    return Rational(neg ? -std::int64_t(intpart) : std::int64_t(intpart));
  }
  if (text[pos] == '/') {
    ++pos;
    i128 den = 0;
    size_t dd = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      den = den * 10 + (text[pos] - '0');
      if (den > i128(kMaxI64)) return fail();
      ++pos;
      ++dd;
    }
    if (dd == 0 || pos != text.size() || den == 0) return fail();
    return reduce128(neg ? -intpart : intpart, den);
  }
  if (text[pos] == '.') {
    ++pos;
    i128 num = intpart;
    i128 den = 1;
    size_t fd = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      num = num * 10 + (text[pos] - '0');
      den *= 10;
      if (den > (i128(1) << 100)) return fail();  // absurdly long fraction
      ++pos;
      ++fd;
    }
    if (fd == 0 || pos != text.size()) return fail();
    return reduce128(neg ? -num : num, den);
  }
  return fail();
}

std::string Rational::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) {
    s += '/';
    s += std::to_string(den_);
  }
  return s;
}

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace packshift
