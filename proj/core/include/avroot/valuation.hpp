#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace avroot {

// A p-adic valuation: a nonnegative integer, or Infinite exactly for input 0.
// The explicit infinite state keeps the 2*nu(t) vs nu(s) branch dispatch sound
// at t = 0 instead of relying on an integer sentinel.
class Valuation {
 public:
  constexpr explicit Valuation(std::uint64_t v) : v_(v), infinite_(false) {}

  static constexpr Valuation infinite() { return Valuation(); }

  constexpr bool is_infinite() const { return infinite_; }

  std::uint64_t value() const {
    if (infinite_) throw std::logic_error("Valuation: value() on infinite valuation");
    return v_;
  }

  bool is_even() const { return value() % 2 == 0; }

  friend constexpr bool operator==(Valuation a, Valuation b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
  }
  friend constexpr bool operator!=(Valuation a, Valuation b) { return !(a == b); }
  friend constexpr bool operator<(Valuation a, Valuation b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.v_ < b.v_;
  }
  friend constexpr bool operator>(Valuation a, Valuation b) { return b < a; }
  friend constexpr bool operator<=(Valuation a, Valuation b) { return !(b < a); }
  friend constexpr bool operator>=(Valuation a, Valuation b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, Valuation v) {
    if (v.infinite_) return os << "inf";
    return os << v.v_;
  }

 private:
  constexpr Valuation() : v_(0), infinite_(true) {}
  std::uint64_t v_;
  bool infinite_;
};

}  // namespace avroot
