#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace avroot {

// Arbitrary-precision integer used throughout the library.
using Int = boost::multiprecision::cpp_int;

// x mod m mapped into [0, m).
inline long mod_pos(const Int& x, long m) {
  long r = static_cast<long>(x % m);
  return r < 0 ? r + m : r;
}

inline Int pow_int(const Int& base, std::uint64_t exp) {
  Int r = 1, b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

// gcd with one balancing Euclid step first. The library's binary gcd
// degrades badly when the operands differ wildly in size, which is the
// common case when reducing long products of small factors.
inline Int balanced_gcd(const Int& a, const Int& b) {
  Int x = abs(a), y = abs(b);
  if (x == 0) return y;
  if (y == 0) return x;
  if (x < y) x.swap(y);
  x %= y;
  if (x == 0) return y;
  return gcd(x, y);
}

// Exact rational with the invariants: lowest terms, denominator > 0.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}            // NOLINT: implicit by design
  Rational(const Int& n) : num_(n), den_(1) {}     // NOLINT
  Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  const Int& numerator() const { return num_; }
  const Int& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int signum() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational operator-() const { return Rational(-num_, den_, already_reduced{}); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  // Knuth cross-reduction: keeps intermediates reduced without a full gcd of
  // the products, so long factor chains stay cheap.
  friend Rational operator*(const Rational& a, const Rational& b) {
    Int g1 = balanced_gcd(a.num_, b.den_);
    Int g2 = balanced_gcd(b.num_, a.den_);
    return Rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1),
                    already_reduced{});
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    Int g1 = balanced_gcd(a.num_, b.num_);
    Int g2 = balanced_gcd(b.den_, a.den_);
    Rational r((a.num_ / g1) * (b.den_ / g2), (a.den_ / g2) * (b.num_ / g1),
               already_reduced{});
    if (r.den_ < 0) {
      r.num_ = -r.num_;
      r.den_ = -r.den_;
    }
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  // base^exp with negative exponents allowed (base != 0 in that case).
  static Rational power_of(const Int& base, long long exp) {
    if (exp >= 0) return Rational(pow_int(base, static_cast<std::uint64_t>(exp)));
    if (base == 0) throw std::domain_error("Rational: 0 to a negative power");
    return Rational(Int(1), pow_int(base, static_cast<std::uint64_t>(-exp)));
  }

  // Serialized as "num/den", always with the denominator, e.g. "0/1", "-1/2".
  std::string str() const { return num_.str() + "/" + den_.str(); }

  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
      return Rational(Int(std::string(text)));
    Int n{std::string(text.substr(0, slash))};
    Int d{std::string(text.substr(slash + 1))};
    return Rational(n, d);
  }

 private:
  struct already_reduced {};
  Rational(Int num, Int den, already_reduced)
      : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    Int g = balanced_gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

// Approximate decimal rendering, 12 significant digits by default. The
// fraction string is the authoritative value; this is a convenience only.
std::string approx_decimal(const Rational& r, unsigned digits = 12);

}  // namespace avroot
