#pragma once

#include <utility>
#include <vector>

#include "avroot/numeric.hpp"
#include "avroot/sign.hpp"

namespace avroot {

// The average root number over the family member s, assembled as minus the
// product of local factors: the finitely many exceptional factors at primes
// dividing 6s, the nontrivial generic factors up to the cutoff, and a
// rigorous enclosure [1 - 5/cutoff, 1] of the tail of the remaining generic
// product. Every generic factor lies in (1 - 5/p^2, 1], so the tail is
// strictly positive and the sign of the average is exact.
struct AverageResult {
  Int s;
  Int cutoff;
  std::vector<std::pair<Int, Rational>> exceptional_factors;  // p | 6s, ascending
  std::vector<std::pair<Int, Rational>> generic_factors;      // p <= cutoff, factor != 1
  Rational finite_product;  // product of all stored factors
  Rational lo;              // lo <= average <= hi
  Rational hi;
  bool parity_biased;       // average nonzero, decided by exact zero tests
  Sign average_sign;
};

// Sorted distinct primes dividing 6s; always contains 2 and 3.
std::vector<Int> exceptional_primes(const Int& s);

// 1 - 5/cutoff, a valid lower bound for the tail product over primes beyond
// the cutoff. Requires cutoff >= 5.
Rational tail_lower_bound(const Int& cutoff);

AverageResult average_root_number(const Int& s, const Int& cutoff);

// Exact zero test on the finitely many factors that can vanish (those at
// p | 6s; generic factors are provably nonzero). Agrees with the residue
// test s mod 8 not in {1, 3, 5}.
bool is_parity_biased(const Int& s);

}  // namespace avroot
