#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "avroot/numeric.hpp"
#include "avroot/sign.hpp"
#include "avroot/valuation.hpp"

namespace avroot {

// Deterministic for |n| < 2^64 (fixed Miller-Rabin witness set); strong
// probable-prime test with many rounds beyond that.
bool is_prime(const Int& n);

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

// Largest e with p^e | n; Infinite for n = 0. Requires p prime.
Valuation valuation(const Int& n, const Int& p);

// n / p^{nu_p(n)}, the p-coprime part. Requires n != 0 and p prime.
Int unit_part(const Int& n, const Int& p);

// Legendre symbol (a/p) for an odd prime p: 0 if p | a, +1 on nonzero
// squares mod p, -1 otherwise.
Sign legendre(const Int& a, const Int& p);

// (-1)^{Omega(|n|)} with Omega counting prime factors with multiplicity.
Sign liouville(const Int& n);

// Non-principal character mod 3: +1 on u = 1 (mod 3), -1 on u = 2 (mod 3).
Sign chi3(const Int& u);

// Non-principal character mod 4: +1 on u = 1 (mod 4), -1 on u = 3 (mod 4).
Sign chi4(const Int& u);

// Factorization of |n| as (prime, exponent) pairs with primes ascending.
// Trial division up to 10^6, then Pollard rho with primality certification;
// complete for any input that fits the desk scale this library targets.
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

}  // namespace avroot
