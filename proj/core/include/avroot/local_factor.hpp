#pragma once

#include "avroot/numeric.hpp"

namespace avroot {

// Z_p splits, up to the measure-zero sets {0} and {t^2 = s}, into three
// regions by comparing 2*nu_p(t) with nu_p(s). Every local factor below is
// the integral of the modified local root number over one region or their
// sum over all of Z_p.
enum class Region {
  less_than,     // 2 nu_p(t) < nu_p(s)
  greater_than,  // nu_p(s) < 2 nu_p(t)
  equal,         // 2 nu_p(t) = nu_p(s)
};

// Per-region integral of w_p* for p >= 5, in closed form.
Rational local_factor_ge5_region(const Int& p, const Int& s, Region region);

// E(p) = integral of w_p* over Z_p for p >= 5: the sum of the three regions.
Rational local_factor_ge5(const Int& p, const Int& s);

// Simplification of E(p) valid when p does not divide 6s: 1 unless s is a
// nonzero square mod p and p = 2 (mod 3). Must agree with local_factor_ge5
// on its domain.
Rational local_factor_generic(const Int& p, const Int& s);

// Haar measure of {t : nu_p(t) = nu_p(s)/2, nu_p(t^2-s) = nu_p(s)+k} for
// p >= 5, in closed form (0 whenever nu_p(s) is odd). The brute-force
// counterpart lives in the p-adic integration module.
Rational equal_shell_measure_closed(const Int& p, const Int& s, unsigned k);

// Per-region integrals and totals at the wild primes 3 and 2. The pointwise
// root numbers are not available at these primes; the region tables are the
// contract and are cross-checked against the combined displays in detail::.
Rational local_factor_3_region(const Int& s, Region region);
Rational local_factor_3(const Int& s);
Rational local_factor_2_region(const Int& s, Region region);
Rational local_factor_2(const Int& s);

// Dispatch on p: 2, 3, or >= 5.
Rational local_factor(const Int& p, const Int& s);

namespace detail {

// Independent transcriptions of the combined case tables. These restate the
// same mathematics as the region sums with separately typed case ladders;
// the test suite asserts equality across every branch, guarding against
// transcription slips in either copy.
Rational local_factor_ge5_direct(const Int& p, const Int& s);
Rational local_factor_3_direct(const Int& s);
Rational local_factor_2_direct(const Int& s);

}  // namespace detail

}  // namespace avroot
