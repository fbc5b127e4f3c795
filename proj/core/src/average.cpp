#include "avroot/average.hpp"

#include <stdexcept>

#include "avroot/arith.hpp"
#include "avroot/local_factor.hpp"

namespace avroot {

namespace {

constexpr std::uint32_t kMaxCutoff = 100'000'000;

std::uint32_t checked_cutoff(const Int& cutoff) {
  if (cutoff < 5) throw std::invalid_argument("average: cutoff must be at least 5");
  if (cutoff > kMaxCutoff)
    throw std::invalid_argument("average: cutoff above the supported sieve range");
  return static_cast<std::uint32_t>(cutoff);
}

}  // namespace

std::vector<Int> exceptional_primes(const Int& s) {
  if (s == 0) throw std::invalid_argument("exceptional_primes: s must be nonzero");
  std::vector<Int> primes{2, 3};
  for (const auto& [p, e] : factorize(s)) {
    if (p >= 5) primes.push_back(p);
  }
  return primes;
}

Rational tail_lower_bound(const Int& cutoff) {
  if (cutoff < 5) throw std::invalid_argument("tail_lower_bound: cutoff must be at least 5");
  return Rational(1) - Rational(Int(5), cutoff);
}

AverageResult average_root_number(const Int& s, const Int& cutoff) {
  if (s == 0) throw std::invalid_argument("average: s must be nonzero");
  const std::uint32_t bound = checked_cutoff(cutoff);

  AverageResult res;
  res.s = s;
  res.cutoff = cutoff;

  for (const Int& p : exceptional_primes(s))
    res.exceptional_factors.emplace_back(p, local_factor(p, s));

  // Generic primes p not dividing 6s contribute 1 unless s is a nonzero
  // square mod p and p = 2 (mod 3); only those factors are stored.
  for (std::uint32_t p : primes_up_to(bound)) {
    if (p < 5 || s % p == 0) continue;
    if (p % 3 != 2) continue;
    if (legendre(s, Int(p)) != Sign::plus()) continue;
    res.generic_factors.emplace_back(Int(p), local_factor_generic(Int(p), s));
  }

  // Accumulate raw integer products and reduce once; factors are already in
  // lowest terms individually but share common factors across primes, so a
  // single big gcd beats a reduction per step.
  Int num = 1, den = 1;
  for (const auto& [p, f] : res.exceptional_factors) {
    num *= f.numerator();
    den *= f.denominator();
  }
  for (const auto& [p, f] : res.generic_factors) {
    num *= f.numerator();
    den *= f.denominator();
  }
  const Rational product(num, den);
  res.finite_product = product;

  // average = -product * tail with tail in [1 - 5/cutoff, 1] and tail > 0.
  const Rational tail_lo = tail_lower_bound(cutoff);
  const Rational full = -product;
  const Rational trimmed = -product * tail_lo;
  if (full <= trimmed) {
    res.lo = full;
    res.hi = trimmed;
  } else {
    res.lo = trimmed;
    res.hi = full;
  }
  res.parity_biased = !product.is_zero();
  res.average_sign = Sign::from_int(-product.signum());
  return res;
}

bool is_parity_biased(const Int& s) {
  if (s == 0) throw std::invalid_argument("is_parity_biased: s must be nonzero");
  for (const Int& p : exceptional_primes(s)) {
    if (local_factor(p, s).is_zero()) return false;
  }
  return true;
}

}  // namespace avroot
