#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "avroot/numeric.hpp"
#include "avroot/sign.hpp"
#include "avroot/valuation.hpp"

namespace avroot {

// Specialization lies on the discriminant locus t^2 = s.
class singular_specialization : public std::domain_error {
 public:
  singular_specialization() : std::domain_error("singular specialization: t^2 = s") {}
};

// Pointwise local root numbers exist here only for p >= 5. The tables
// defining them at p = 2, 3 are not part of this library, so those primes
// fail loudly instead of returning a fabricated value.
class unsupported_prime : public std::invalid_argument {
 public:
  explicit unsupported_prime(const std::string& what) : std::invalid_argument(what) {}
};

struct LocalRootInput {
  Int s;  // nonzero
  Int t;
  Int p;  // prime >= 5
};

// Local root number w_p(t) of the specialization at t, for p >= 5. Branches
// on the comparison of 2*nu_p(t) with nu_p(s); t = 0 falls into the
// nu_p(s) < 2*nu_p(t) branch through the infinite valuation.
Sign local_root_number(const LocalRootInput& in);

// w_p(t) twisted by (-1/p)^{nu_p(t^2-s)}; equal to +1 whenever p does not
// divide 6s and nu_p(t^2-s) <= 1, which is what makes averaging possible.
Sign modified_local_root_number(const LocalRootInput& in);

// Archimedean counterpart: sgn(t^2 - s).
Sign archimedean_root_sign(const Int& s, const Int& t);

// (c_- + c_+)/2 for the archimedean factor; both limits of sgn(x^2 - s) at
// +-infinity are +1, so this is exactly 1 for every s.
Rational archimedean_limit_mean(const Int& s);

namespace detail {

// Legendre symbols mod a fixed odd prime. Tabulated when p is small enough,
// so per-point evaluation in hot loops needs no modular exponentiation; the
// general path uses Euler's criterion.
class SymbolTable {
 public:
  explicit SymbolTable(const Int& p);
  SymbolTable() = default;

  int symbol(const Int& a) const;
  int minus_one() const { return minus_one_; }
  int minus_two() const { return minus_two_; }
  int minus_three() const { return minus_three_; }

 private:
  Int p_{5};
  long p_long_ = 0;               // nonzero when tabulated
  std::vector<signed char> unit_;  // unit_[a] = (a/p) for a in [0, p)
  int minus_one_ = 0, minus_two_ = 0, minus_three_ = 0;
};

// The data determining w_p(t): valuations of t and s, the mod-p residue of
// the unit part of t (meaningful when nu_t is finite), and nu_p(t^2 - s).
struct RootData {
  Valuation nu_t = Valuation::infinite();
  std::uint64_t nu_s = 0;
  Int t_unit;
  std::uint64_t nu_tt_minus_s = 0;
};

// Single implementation of the three-branch case ladder, shared by the
// public pointwise operations and the p-adic integration oracle.
Sign local_root_from_data(const RootData& d, const SymbolTable& sym);
Sign modified_local_root_from_data(const RootData& d, const SymbolTable& sym);

}  // namespace detail

}  // namespace avroot
