#include <cstdint>
#include <vector>

#include "avroot/arith.hpp"
#include "avroot/local_factor.hpp"
#include "doctest.h"

using avroot::Int;
using avroot::Rational;
using avroot::Region;

namespace {

Rational rp(long base, std::int64_t e) { return Rational::power_of(base, e); }

// Raw piece sums for the 2 nu(t) < nu(s) regions, transcribed from the
// displayed integrals piece by piece; the region functions must reproduce
// their totals on every branch.

Rational less_region_pieces_p3(std::uint64_t nu, const Int& s_unit) {
  int c3 = avroot::mod_pos(s_unit, 3) == 1 ? 1 : -1;
  Rational total = 0;
  // nu - 2 nu_t = 1 with nu_t even
  if (nu % 4 == 1) total += Rational(2) * rp(3, -static_cast<std::int64_t>((nu + 1) / 2));
  // nu - 2 nu_t >= 3 with nu_t even: sum over k = nu (mod 4), 3 <= k <= nu
  for (std::uint64_t k = 3; k <= nu; ++k) {
    if (k % 4 != nu % 4) continue;
    total += Rational(-2) * rp(3, -static_cast<std::int64_t>((nu - k) / 2 + 1));
  }
  // nu - 2 nu_t = 1 with nu_t odd
  if (nu % 4 == 3 && nu >= 3)
    total += Rational(2 * c3) * rp(3, -static_cast<std::int64_t>((nu + 1) / 2));
  // nu - 2 nu_t = 3 with nu_t odd
  if (nu % 4 == 1 && nu >= 5)
    total += Rational(2) * rp(3, -static_cast<std::int64_t>((nu - 1) / 2));
  return total;
}

Rational less_region_pieces_p2(std::uint64_t nu, const Int& s_unit) {
  long r4 = avroot::mod_pos(s_unit, 4);
  int c4 = r4 == 1 ? 1 : -1;
  Rational total = 0;
  // k = 2, nu_t even
  if (nu % 4 == 2)
    total += rp(2, -static_cast<std::int64_t>(nu / 2 + 1)) * Rational(r4 == 1 ? 1 : -2);
  // k = 4, nu_t even
  if (nu % 4 == 0 && nu >= 4) total += rp(2, -static_cast<std::int64_t>(nu / 2));
  // k = 5, nu_t even
  if (nu % 4 == 1 && nu >= 5) total += rp(2, -static_cast<std::int64_t>((nu - 1) / 2));
  // k >= 7, nu_t even: sum over k = nu (mod 4), 7 <= k <= nu
  for (std::uint64_t k = 7; k <= nu; ++k) {
    if (k % 4 != nu % 4) continue;
    total += Rational(-2) * rp(2, -static_cast<std::int64_t>((nu - k) / 2 + 3));
  }
  // k = 3, nu_t odd
  if (nu % 4 == 1 && nu >= 5)
    total += Rational(-c4) * rp(2, -static_cast<std::int64_t>((nu - 1) / 2));
  return total;
}

}  // namespace

TEST_CASE("local factor for p >= 5: region values at sample points") {
  CHECK(avroot::local_factor_ge5_region(5, 1, Region::greater_than) == Rational(1, 5));
  CHECK(avroot::local_factor_ge5_region(5, 1, Region::less_than) == Rational(0));
  CHECK(avroot::local_factor_ge5_region(5, 1, Region::equal) == Rational(6512, 9765));
  // nu_7(343) = 3 and (-1/7) = -1.
  CHECK(avroot::local_factor_ge5_region(7, 343, Region::less_than) == Rational(-6, 49));
}

TEST_CASE("local factor for p >= 5: totals") {
  CHECK(avroot::local_factor_ge5(5, 2) == Rational(1));
  CHECK(avroot::local_factor_ge5(7, 2) == Rational(1));
  CHECK(avroot::local_factor_ge5(5, 1) == Rational(1693, 1953));
}

TEST_CASE("generic simplification") {
  CHECK(avroot::local_factor_generic(5, 2) == Rational(1));
  CHECK(avroot::local_factor_generic(5, 1) == Rational(1693, 1953));
  CHECK(avroot::local_factor_generic(11, 5) == Rational(1) - Rational(5368, 177156));
  CHECK_THROWS_AS(avroot::local_factor_generic(5, 10), std::invalid_argument);
  CHECK_THROWS_AS(avroot::local_factor_generic(4, 1), std::invalid_argument);
}

TEST_CASE("generic equals the full formula whenever p does not divide 6s") {
  for (std::uint32_t p : avroot::primes_up_to(97)) {
    if (p < 5) continue;
    for (long s = -60; s <= 60; ++s) {
      if (s == 0 || (6 * Int(s)) % p == 0) continue;
      CHECK(avroot::local_factor_generic(p, s) == avroot::local_factor_ge5(p, s));
    }
  }
}

TEST_CASE("shell measures in closed form") {
  CHECK(avroot::equal_shell_measure_closed(5, 7, 2) == Rational(0));   // (7/5) = -1
  CHECK(avroot::equal_shell_measure_closed(5, 1, 0) == Rational(2, 5));
  CHECK(avroot::equal_shell_measure_closed(7, 49, 0) == Rational(4, 49));
  CHECK(avroot::equal_shell_measure_closed(5, 1, 1) == Rational(8, 25));
  CHECK(avroot::equal_shell_measure_closed(5, 5, 0) == Rational(0));   // odd nu
}

TEST_CASE("less-than region for p >= 5 equals its geometric sum") {
  for (long p : {5L, 7L, 11L}) {
    Rational minus_one(avroot::legendre(-1, p).value());
    for (std::uint64_t nu = 0; nu <= 20; ++nu) {
      Int s = avroot::pow_int(p, nu) * 2;
      Rational expected = 0;
      for (std::uint64_t k = 0; 4 * k < (nu >= 2 ? nu - 2 : 0); ++k)
        expected += minus_one * Rational(p - 1) * rp(p, -2 * static_cast<std::int64_t>(k) - 2);
      CHECK(avroot::local_factor_ge5_region(p, s, Region::less_than) == expected);
    }
  }
}

TEST_CASE("local factor at 3: regions") {
  CHECK(avroot::local_factor_3_region(1, Region::greater_than) == Rational(1, 9));
  CHECK(avroot::local_factor_3_region(1, Region::equal) == Rational(-1, 63));
  CHECK(avroot::local_factor_3_region(2, Region::equal) == Rational(2, 9));
  CHECK(avroot::local_factor_3_region(3, Region::less_than) == Rational(2, 3));
}

TEST_CASE("local factor at 3: totals") {
  CHECK(avroot::local_factor_3(1) == Rational(2, 21));
  CHECK(avroot::local_factor_3(2) == Rational(1, 3));
  CHECK(avroot::local_factor_3(3) == Rational(5, 9));
}

TEST_CASE("local factor at 2: regions") {
  CHECK(avroot::local_factor_2_region(7, Region::equal) == Rational(-1, 2));
  CHECK(avroot::local_factor_2_region(15, Region::equal) == Rational(1, 2));
  CHECK(avroot::local_factor_2_region(2, Region::greater_than) == Rational(1, 4));
  CHECK(avroot::local_factor_2_region(4, Region::less_than) == Rational(1, 4));
}

TEST_CASE("local factor at 2: totals") {
  CHECK(avroot::local_factor_2(1) == Rational(0));
  CHECK(avroot::local_factor_2(7) == Rational(-1, 2));
  CHECK(avroot::local_factor_2(2) == Rational(1, 4));
}

TEST_CASE("local_factor dispatch") {
  CHECK(avroot::local_factor(2, 7) == avroot::local_factor_2(7));
  CHECK(avroot::local_factor(3, 7) == avroot::local_factor_3(7));
  CHECK(avroot::local_factor(5, 7) == avroot::local_factor_ge5(5, 7));
  CHECK_THROWS_AS(avroot::local_factor(6, 7), std::invalid_argument);
}

TEST_CASE("factors are averages of signs, hence bounded by 1") {
  std::vector<Int> primes;
  for (std::uint32_t p : avroot::primes_up_to(97))
    if (p >= 5) primes.push_back(p);
  for (long s = -500; s <= 500; ++s) {
    if (s == 0) continue;
    CHECK(avroot::local_factor_2(s).abs() <= Rational(1));
    CHECK(avroot::local_factor_3(s).abs() <= Rational(1));
    for (auto region : {Region::less_than, Region::greater_than, Region::equal}) {
      CHECK(avroot::local_factor_2_region(s, region).abs() <= Rational(1));
      CHECK(avroot::local_factor_3_region(s, region).abs() <= Rational(1));
    }
    for (const Int& p : primes) {
      CHECK(avroot::local_factor_ge5(p, s).abs() <= Rational(1));
      for (auto region : {Region::less_than, Region::greater_than, Region::equal})
        CHECK(avroot::local_factor_ge5_region(p, s, region).abs() <= Rational(1));
    }
  }
}

TEST_CASE("region sums agree with the directly transcribed displays (samples)") {
  for (long s = -700; s <= 700; ++s) {
    if (s == 0) continue;
    CHECK(avroot::local_factor_2(s) == avroot::detail::local_factor_2_direct(s));
    CHECK(avroot::local_factor_3(s) == avroot::detail::local_factor_3_direct(s));
    for (long p : {5L, 7L, 11L, 13L})
      CHECK(avroot::local_factor_ge5(p, s) == avroot::detail::local_factor_ge5_direct(p, s));
  }
  // Deep valuations at p >= 5 as well.
  for (long p : {5L, 7L}) {
    for (std::uint64_t nu = 0; nu <= 16; ++nu) {
      for (long u : {1L, 2L, 3L, -1L, -2L}) {
        Int s = avroot::pow_int(p, nu) * u;
        CHECK(avroot::local_factor_ge5(p, s) ==
              avroot::detail::local_factor_ge5_direct(p, s));
      }
    }
  }
}

TEST_CASE("less-than region at 3 equals its piece table") {
  for (std::uint64_t nu = 0; nu <= 18; ++nu) {
    for (long u : {1L, 2L, 4L, 5L, -1L, -2L}) {
      Int s = avroot::pow_int(3, nu) * u;
      CHECK(avroot::local_factor_3_region(s, Region::less_than) ==
            less_region_pieces_p3(nu, u));
    }
  }
}

TEST_CASE("less-than region at 2 equals its piece table") {
  for (std::uint64_t nu = 0; nu <= 18; ++nu) {
    for (long u : {1L, 3L, 5L, 7L, 9L, 11L, 13L, 15L, -1L, -3L, -5L, -7L}) {
      Int s = avroot::pow_int(2, nu) * u;
      CHECK(avroot::local_factor_2_region(s, Region::less_than) ==
            less_region_pieces_p2(nu, u));
    }
  }
}

TEST_CASE("vanishing of the factor at 2 follows the mod 8 rule") {
  for (long s = -10000; s <= 10000; ++s) {
    if (s == 0 || s % 2 == 0) continue;
    long r = ((s % 8) + 8) % 8;
    bool zero = (r == 1 || r == 3 || r == 5);
    CHECK(avroot::local_factor_2(s).is_zero() == zero);
  }
}
