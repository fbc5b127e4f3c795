#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>

#include "avroot/numeric.hpp"

namespace avroot {

// A value in {-1, 0, +1}, closed under multiplication.
class Sign {
 public:
  constexpr Sign() : v_(1) {}

  static constexpr Sign plus() { return Sign(1); }
  static constexpr Sign minus() { return Sign(-1); }
  static constexpr Sign zero() { return Sign(0); }

  static Sign from_int(int v) {
    if (v < -1 || v > 1) throw std::invalid_argument("Sign: value not in {-1,0,1}");
    return Sign(v);
  }

  static Sign of(const Int& n) { return Sign(n == 0 ? 0 : (n > 0 ? 1 : -1)); }

  constexpr int value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr Sign operator*(Sign a, Sign b) { return Sign(a.v_ * b.v_); }
  Sign& operator*=(Sign o) {
    v_ *= o.v_;
    return *this;
  }

  // this^k; 0^0 = 1 by the empty-product convention.
  constexpr Sign pow(std::uint64_t k) const {
    if (k == 0) return Sign(1);
    if (v_ == 1 || v_ == 0) return *this;
    return Sign(k % 2 == 0 ? 1 : -1);
  }

  friend constexpr bool operator==(Sign a, Sign b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Sign a, Sign b) { return a.v_ != b.v_; }

  friend std::ostream& operator<<(std::ostream& os, Sign s) { return os << s.v_; }

 private:
  constexpr explicit Sign(int v) : v_(v) {}
  int v_;
};

}  // namespace avroot
