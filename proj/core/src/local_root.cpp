#include "avroot/local_root.hpp"

#include <cassert>

#include "avroot/arith.hpp"

namespace avroot {

namespace detail {

namespace {
constexpr long kTabulationBound = 1'000'000;
}

SymbolTable::SymbolTable(const Int& p) : p_(p) {
  if (p <= kTabulationBound) {
    p_long_ = static_cast<long>(p);
    unit_.assign(static_cast<std::size_t>(p_long_), -1);
    unit_[0] = 0;
    for (long a = 1; a < p_long_; ++a) {
      long sq = static_cast<long>(
          (static_cast<unsigned long long>(a) * static_cast<unsigned long long>(a)) %
          static_cast<unsigned long long>(p_long_));
      unit_[static_cast<std::size_t>(sq)] = 1;
    }
  }
  minus_one_ = symbol(Int(-1));
  minus_two_ = symbol(Int(-2));
  minus_three_ = symbol(Int(-3));
}

int SymbolTable::symbol(const Int& a) const {
  if (p_long_ != 0)
    return unit_[static_cast<std::size_t>(mod_pos(a, p_long_))];
  Int r = a % p_;
  if (r < 0) r += p_;
  if (r == 0) return 0;
  return powm(r, (p_ - 1) / 2, p_) == 1 ? 1 : -1;
}

Sign local_root_from_data(const RootData& d, const SymbolTable& sym) {
  const bool t_less = !d.nu_t.is_infinite() && 2 * d.nu_t.value() < d.nu_s;
  const bool t_greater = d.nu_t.is_infinite() || d.nu_s < 2 * d.nu_t.value();

  if (t_less) {
    // 0 <= 2 nu(t) < nu(s)
    if (d.nu_t.value() % 2 == 0)
      return Sign::from_int(-sym.symbol(3 * d.t_unit));
    return Sign::from_int(sym.minus_one());
  }
  if (t_greater) {
    // 0 <= nu(s) < 2 nu(t)
    if (d.nu_s % 2 == 0)
      return Sign::from_int(sym.minus_one()).pow(d.nu_s / 2);
    return Sign::from_int(sym.minus_two());
  }
  // 0 <= 2 nu(t) = nu(s)
  const std::uint64_t m = d.nu_t.value() + d.nu_tt_minus_s;
  if (m % 2 == 1) return Sign::from_int(sym.minus_one());
  const std::uint64_t r6 = m % 6;
  if (r6 == 2 || r6 == 4) return Sign::from_int(sym.minus_three());
  assert(r6 == 0);  // even residues mod 6 are exactly {0, 2, 4}
  return Sign::plus();
}

Sign modified_local_root_from_data(const RootData& d, const SymbolTable& sym) {
  return local_root_from_data(d, sym) *
         Sign::from_int(sym.minus_one()).pow(d.nu_tt_minus_s);
}

}  // namespace detail

namespace {

struct ValidatedInput {
  detail::RootData data;
  detail::SymbolTable sym;
};

ValidatedInput validate(const LocalRootInput& in) {
  if (in.s == 0) throw std::invalid_argument("local root number: s must be nonzero");
  if (in.p < 5)
    throw unsupported_prime("local root number: only p >= 5 is supported");
  if (!is_prime(in.p)) throw std::invalid_argument("local root number: p must be prime");
  if (in.t * in.t == in.s) throw singular_specialization();

  ValidatedInput v;
  v.sym = detail::SymbolTable(in.p);
  v.data.nu_t = valuation(in.t, in.p);
  v.data.nu_s = valuation(in.s, in.p).value();
  v.data.t_unit = in.t == 0 ? Int(0) : unit_part(in.t, in.p);
  v.data.nu_tt_minus_s = valuation(in.t * in.t - in.s, in.p).value();
  return v;
}

}  // namespace

Sign local_root_number(const LocalRootInput& in) {
  auto v = validate(in);
  return detail::local_root_from_data(v.data, v.sym);
}

Sign modified_local_root_number(const LocalRootInput& in) {
  auto v = validate(in);
  return detail::modified_local_root_from_data(v.data, v.sym);
}

Sign archimedean_root_sign(const Int& s, const Int& t) {
  Int d = t * t - s;
  if (d == 0) throw singular_specialization();
  return Sign::of(d);
}

Rational archimedean_limit_mean(const Int& s) {
  if (s == 0) throw std::invalid_argument("archimedean_limit_mean: s must be nonzero");
  return Rational(1);
}

}  // namespace avroot
