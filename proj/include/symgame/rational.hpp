#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "symgame/error.hpp"

namespace symgame {

// Exact rational scalar over int64 numerator / denominator. The denominator
// is kept positive and the fraction reduced. Intermediate products run in
// 128 bits; a result that does not narrow back to 64 bits throws
// OverflowError instead of silently wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den) { *this = normalized(num, den); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // "p", "-p" or "p/q" with q > 0 after normalization.
  static Rational parse(std::string_view text);
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    using I = __int128;
    return normalized(I(a.num_) * b.den_ + I(b.num_) * a.den_, I(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    using I = __int128;
    return normalized(I(a.num_) * b.den_ - I(b.num_) * a.den_, I(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    using I = __int128;
    return normalized(I(a.num_) * b.num_, I(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw ValueError("rational division by zero");
    using I = __int128;
    return normalized(I(a.num_) * b.den_, I(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    using I = __int128;
    return I(a.num_) * b.den_ < I(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

 private:
  static Rational normalized(__int128 num, __int128 den);

  std::int64_t num_{0};
  std::int64_t den_{1};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

namespace detail {
inline __int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace detail

inline Rational Rational::normalized(__int128 num, __int128 den) {
  if (den == 0) throw ValueError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  const __int128 g = detail::gcd128(num, den);
  num /= g;
  den /= g;
  constexpr __int128 lo = INT64_MIN;
  constexpr __int128 hi = INT64_MAX;
  if (num < lo || num > hi || den > hi) {
    throw OverflowError("rational result exceeds 64-bit range");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

inline Rational Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> std::int64_t {
    if (s.empty()) throw ParseError("empty integer in rational literal");
    std::size_t pos = 0;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
      negative = s[0] == '-';
      pos = 1;
    }
    if (pos == s.size()) throw ParseError("sign without digits in rational literal");
    __int128 acc = 0;
    for (; pos < s.size(); ++pos) {
      if (s[pos] < '0' || s[pos] > '9') {
        throw ParseError("invalid character in rational literal: '" + std::string(s) + "'");
      }
      acc = acc * 10 + (s[pos] - '0');
      if (acc > __int128(INT64_MAX) + 1) throw OverflowError("rational literal out of range");
    }
    if (negative) acc = -acc;
    if (acc < __int128(INT64_MIN) || acc > __int128(INT64_MAX)) {
      throw OverflowError("rational literal out of range");
    }
    return static_cast<std::int64_t>(acc);
  };

  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

inline std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace symgame
