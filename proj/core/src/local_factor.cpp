#include "avroot/local_factor.hpp"

#include <cstdint>
#include <stdexcept>

#include "avroot/arith.hpp"
#include "avroot/sign.hpp"

namespace avroot {

namespace {

struct PrimeData {
  std::uint64_t nu;  // nu_p(s)
  Int s_unit;        // s / p^nu
};

PrimeData split(const Int& p, const Int& s) {
  if (s == 0) throw std::invalid_argument("local factor: s must be nonzero");
  PrimeData d{0, s};
  while (d.s_unit % p == 0) {
    d.s_unit /= p;
    ++d.nu;
  }
  return d;
}

void require_ge5(const Int& p) {
  if (p < 5 || !is_prime(p))
    throw std::invalid_argument("local factor: p must be a prime >= 5");
}

Rational rp(const Int& base, std::int64_t e) { return Rational::power_of(base, e); }

// 1/p^e
Rational inv_pow(const Int& p, std::uint64_t e) {
  return Rational(Int(1), pow_int(p, e));
}

Rational ge5_greater(const Int& p, const PrimeData& d) {
  if (d.nu % 2 == 0) {
    Sign lead = legendre(Int(-1), p).pow(d.nu / 2);
    return Rational(lead.value()) * inv_pow(p, d.nu / 2 + 1);
  }
  return Rational(legendre(Int(2), p).value()) * inv_pow(p, (d.nu + 1) / 2);
}

Rational ge5_less(const Int& p, const PrimeData& d) {
  if (d.nu <= 2) return 0;
  Rational minus_one(legendre(Int(-1), p).value());
  if (d.nu <= 6) return minus_one * Rational(p - 1, p * p);
  std::uint64_t alpha = (d.nu - 2) / 4;
  Rational geom = d.nu % 4 == 2 ? Rational(1) - inv_pow(p, 2 * alpha)
                                : Rational(1) - inv_pow(p, 2 * alpha + 2);
  return minus_one * Rational(Int(1), p + 1) * geom;
}

Rational ge5_equal(const Int& p, const PrimeData& d) {
  if (d.nu % 2 == 1) return 0;
  const std::uint64_t j = d.nu % 4;  // in {0, 2}
  const std::uint64_t jh = j / 2;
  Rational lead(legendre(Int(-1), p).pow(jh).value());
  const bool s_square = legendre(d.s_unit, p) == Sign::plus();
  if (!s_square || p % 3 == 1)
    return lead * Rational(p - 1) * inv_pow(p, d.nu / 2 + 1);
  // s_p a square mod p and p = 2 (mod 3)
  Int p4 = pow_int(p, 4);
  Rational frac(p4 + Int(jh) * p * p * p + p * p + Int(jh),
                (p + 1) * (p4 + p * p + 1));
  Rational inner = Rational(p - Int(2 * j + 1)) -
                   Rational(4) * Rational(jh == 0 ? 1 : -1) * frac;
  return lead * inner * inv_pow(p, d.nu / 2 + 1);
}

}  // namespace

Rational local_factor_ge5_region(const Int& p, const Int& s, Region region) {
  require_ge5(p);
  PrimeData d = split(p, s);
  switch (region) {
    case Region::greater_than:
      return ge5_greater(p, d);
    case Region::less_than:
      return ge5_less(p, d);
    case Region::equal:
      return ge5_equal(p, d);
  }
  throw std::logic_error("unreachable");
}

Rational local_factor_ge5(const Int& p, const Int& s) {
  require_ge5(p);
  PrimeData d = split(p, s);
  return ge5_greater(p, d) + ge5_less(p, d) + ge5_equal(p, d);
}

Rational local_factor_generic(const Int& p, const Int& s) {
  require_ge5(p);
  if (s == 0 || s % p == 0)
    throw std::invalid_argument("local_factor_generic: requires p not dividing 6s");
  if (legendre(s, p) != Sign::plus()) return 1;
  if (p % 3 == 1) return 1;
  Int p4 = pow_int(p, 4);
  return Rational(1) - Rational(4 * p * (p * p + 1), (p + 1) * (p4 + p * p + 1));
}

Rational equal_shell_measure_closed(const Int& p, const Int& s, unsigned k) {
  require_ge5(p);
  PrimeData d = split(p, s);
  if (d.nu % 2 == 1) return 0;
  const bool s_square = legendre(d.s_unit, p) == Sign::plus();
  if (k == 0)
    return Rational(s_square ? p - 3 : p - 1) * inv_pow(p, d.nu / 2 + 1);
  if (!s_square) return 0;
  return Rational(2 * (p - 1)) * inv_pow(p, d.nu / 2 + k + 1);
}

// ---------------------------------------------------------------------------
// p = 3

namespace {

Rational p3_greater(const PrimeData& d) {
  if (d.nu % 2 == 0) return inv_pow(3, d.nu / 2 + 2);
  int c3 = chi3(d.s_unit).value();
  if (d.nu % 4 == 1)
    return Rational(1 - 2 * c3) * inv_pow(3, (d.nu + 3) / 2);
  return -inv_pow(3, (d.nu + 1) / 2);
}

Rational p3_less(const PrimeData& d) {
  switch (d.nu) {
    case 0:
      return 0;
    case 1:
      return Rational(2, 3);
    case 2:
      return 0;
    case 3:
      return Rational(2 * (chi3(d.s_unit).value() - 3), 9);
    case 4:
      return Rational(-2, 3);
    default:
      break;
  }
  const std::uint64_t j = d.nu % 4;
  Rational head = Rational(1, 4) *
                  (rp(3, 1 - 2 * static_cast<std::int64_t>(j / 3)) /
                       rp(3, static_cast<std::int64_t>((d.nu - j) / 2)) -
                   Rational(3));
  if (d.nu % 2 == 0) return head;
  if (d.nu % 4 == 1) return head + Rational(8) * inv_pow(3, (d.nu + 1) / 2);
  return head + Rational(2 * chi3(d.s_unit).value()) * inv_pow(3, (d.nu + 1) / 2);
}

Rational p3_equal(const PrimeData& d) {
  if (d.nu % 2 == 1) return 0;
  if (mod_pos(d.s_unit, 3) == 2) return Rational(2) * inv_pow(3, d.nu / 2 + 2);
  return Rational(-1, 7) * inv_pow(3, d.nu / 2 + 2);
}

}  // namespace

Rational local_factor_3_region(const Int& s, Region region) {
  PrimeData d = split(3, s);
  switch (region) {
    case Region::greater_than:
      return p3_greater(d);
    case Region::less_than:
      return p3_less(d);
    case Region::equal:
      return p3_equal(d);
  }
  throw std::logic_error("unreachable");
}

Rational local_factor_3(const Int& s) {
  PrimeData d = split(3, s);
  return p3_greater(d) + p3_less(d) + p3_equal(d);
}

// ---------------------------------------------------------------------------
// p = 2

namespace {

Rational p2_greater(const PrimeData& d) {
  if (d.nu % 2 == 0) return 0;
  int lead = ((d.nu - 1) / 2) % 2 == 0 ? 1 : -1;
  long r8 = mod_pos(d.s_unit, 8);
  int unit_case = (r8 == 1 || r8 == 7) ? 1 : -1;
  return Rational(lead * unit_case) * inv_pow(2, (d.nu + 3) / 2);
}

Rational p2_less(const PrimeData& d) {
  const long r4 = mod_pos(d.s_unit, 4);
  switch (d.nu) {
    case 0:
    case 1:
      return 0;
    case 2:
      return Rational(1, 4) * Rational(r4 == 1 ? 1 : -2);
    case 3:
      return 0;
    case 4:
      return Rational(1, 4);
    case 5:
      return Rational(1 - chi4(d.s_unit).value(), 4);
    case 6:
      return Rational(1, 16) * Rational(r4 == 1 ? 1 : -2);
    default:
      break;
  }
  const std::uint64_t j = d.nu % 4;
  const std::uint64_t ceil_74 = (7 - j + 3) / 4;  // ceil((7-j)/4)
  Rational head =
      Rational(1, 3) *
      (rp(2, static_cast<std::int64_t>(2 * ceil_74) -
                 static_cast<std::int64_t>((d.nu - j) / 2 + 2)) -
       Rational(1));
  Rational scale = inv_pow(2, (d.nu - j) / 2);
  Rational tail;
  switch (j) {
    case 0:
      tail = scale;
      break;
    case 1:
      tail = scale * Rational(1 - chi4(d.s_unit).value());
      break;
    case 2:
      tail = scale * (r4 == 1 ? Rational(1, 4) : Rational(-1, 2));
      break;
    case 3:
      tail = 0;
      break;
  }
  return head + tail;
}

Rational p2_equal(const PrimeData& d) {
  if (d.nu % 2 == 1) return 0;
  const long r4 = mod_pos(d.s_unit, 4);
  const long r8 = mod_pos(d.s_unit, 8);
  const long r16 = mod_pos(d.s_unit, 16);
  if (d.nu % 4 == 0) {
    if (r8 == 1 || r8 == 3 || r8 == 5) return 0;
    if (r16 == 7) return -inv_pow(2, d.nu / 2 + 1);
    return inv_pow(2, d.nu / 2 + 1);  // r16 == 15
  }
  // nu = 2 (mod 4)
  if (r4 == 3) return 0;
  if (r8 == 1) return -inv_pow(2, d.nu / 2 + 2);
  if (r16 == 5) return inv_pow(2, d.nu / 2 + 2);
  return inv_pow(2, d.nu / 2 + 1);  // r16 == 13
}

}  // namespace

Rational local_factor_2_region(const Int& s, Region region) {
  PrimeData d = split(2, s);
  switch (region) {
    case Region::greater_than:
      return p2_greater(d);
    case Region::less_than:
      return p2_less(d);
    case Region::equal:
      return p2_equal(d);
  }
  throw std::logic_error("unreachable");
}

Rational local_factor_2(const Int& s) {
  PrimeData d = split(2, s);
  return p2_greater(d) + p2_less(d) + p2_equal(d);
}

Rational local_factor(const Int& p, const Int& s) {
  if (p == 2) return local_factor_2(s);
  if (p == 3) return local_factor_3(s);
  return local_factor_ge5(p, s);
}

// ---------------------------------------------------------------------------
// Independent transcriptions of the combined displays.

namespace detail {

Rational local_factor_ge5_direct(const Int& p, const Int& s) {
  require_ge5(p);
  PrimeData d = split(p, s);
  const std::uint64_t nu = d.nu;
  const int m1 = legendre(Int(-1), p).value();

  Rational first;
  if (nu % 2 == 0)
    first = Rational(Sign::from_int(m1).pow(nu / 2).value()) * inv_pow(p, nu / 2 + 1);
  else
    first = Rational(legendre(Int(2), p).value()) * inv_pow(p, (nu + 1) / 2);

  Rational second;
  if (nu <= 2) {
    second = 0;
  } else if (nu <= 6) {
    second = Rational(m1) * Rational(p - 1) / Rational(p * p);
  } else {
    std::uint64_t alpha = (nu - 2) / 4;
    Rational tail = nu % 4 == 2 ? Rational(1) - inv_pow(p, 2 * alpha)
                                : Rational(1) - inv_pow(p, 2 * alpha + 2);
    second = Rational(m1) / Rational(p + 1) * tail;
  }

  Rational third;
  if (nu % 2 == 1) {
    third = 0;
  } else {
    std::uint64_t j = nu % 4;
    std::uint64_t jh = j / 2;
    Rational lead(Sign::from_int(m1).pow(jh).value());
    if (legendre(d.s_unit, p) == Sign::minus() || p % 3 == 1) {
      third = lead * Rational(p - 1) * inv_pow(p, nu / 2 + 1);
    } else {
      Int p2 = p * p, p3 = p * p * p, p4 = p * p * p * p;
      Rational inner =
          Rational(p) - Rational(Int(2 * j + 1)) -
          Rational(4 * (jh == 0 ? 1 : -1)) *
              Rational(p4 + Int(jh) * p3 + p2 + Int(jh), (p + 1) * (p4 + p2 + 1));
      third = lead * inv_pow(p, nu / 2 + 1) * inner;
    }
  }

  return first + second + third;
}

Rational local_factor_3_direct(const Int& s) {
  PrimeData d = split(3, s);
  const std::uint64_t nu = d.nu;
  const int c3 = mod_pos(d.s_unit, 3) == 1 ? 1 : -1;

  Rational first;
  if (nu % 2 == 0)
    first = inv_pow(3, nu / 2 + 2);
  else if (nu % 4 == 1)
    first = Rational(1 - 2 * c3) * inv_pow(3, (nu + 3) / 2);
  else
    first = Rational(-1) * inv_pow(3, (nu + 1) / 2);

  Rational second;
  if (nu == 0 || nu == 2) {
    second = 0;
  } else if (nu == 1) {
    second = Rational(2, 3);
  } else if (nu == 3) {
    second = Rational(2) * Rational(c3 - 3, 9);
  } else if (nu == 4) {
    second = Rational(-2, 3);
  } else {
    std::uint64_t j = nu % 4;
    second = Rational(1, 4) *
             (rp(3, 1 - 2 * static_cast<std::int64_t>(j / 3) -
                        static_cast<std::int64_t>((nu - j) / 2)) -
              Rational(3));
    if (nu % 4 == 1)
      second += Rational(8) * inv_pow(3, (nu + 1) / 2);
    else if (nu % 4 == 3)
      second += Rational(2 * c3) * inv_pow(3, (nu + 1) / 2);
  }

  Rational third;
  if (nu % 2 == 1)
    third = 0;
  else if (mod_pos(d.s_unit, 3) == 2)
    third = Rational(2) * inv_pow(3, nu / 2 + 2);
  else
    third = Rational(-1, 7) * inv_pow(3, nu / 2 + 2);

  return first + second + third;
}

Rational local_factor_2_direct(const Int& s) {
  PrimeData d = split(2, s);
  const std::uint64_t nu = d.nu;
  const long r4 = mod_pos(d.s_unit, 4);
  const long r8 = mod_pos(d.s_unit, 8);
  const long r16 = mod_pos(d.s_unit, 16);
  const int c4 = r4 == 1 ? 1 : -1;

  Rational first;
  if (nu % 2 == 0) {
    first = 0;
  } else {
    int lead = ((nu - 1) / 2) % 2 == 0 ? 1 : -1;
    first = Rational(lead * ((r8 == 1 || r8 == 7) ? 1 : -1)) * inv_pow(2, (nu + 3) / 2);
  }

  Rational second;
  if (nu == 0 || nu == 1 || nu == 3) {
    second = 0;
  } else if (nu == 2) {
    second = Rational(r4 == 1 ? 1 : -2, 4);
  } else if (nu == 4) {
    second = Rational(1, 4);
  } else if (nu == 5) {
    second = Rational(1 - c4, 4);
  } else if (nu == 6) {
    second = Rational(r4 == 1 ? 1 : -2, 16);
  } else {
    std::uint64_t j = nu % 4;
    std::uint64_t up = (10 - j) / 4;  // ceil((7-j)/4)
    second = Rational(1, 3) * (rp(2, static_cast<std::int64_t>(2 * up) -
                                          static_cast<std::int64_t>((nu - j) / 2) - 2) -
                               Rational(1));
    Rational scale = inv_pow(2, (nu - j) / 2);
    if (j == 0)
      second += scale;
    else if (j == 1)
      second += scale * Rational(1 - c4);
    else if (j == 2)
      second += scale * (r4 == 1 ? Rational(1, 4) : Rational(-1, 2));
  }

  Rational third;
  if (nu % 2 == 1) {
    third = 0;
  } else if (nu % 4 == 0) {
    if (r8 == 1 || r8 == 3 || r8 == 5)
      third = 0;
    else if (r16 == 7)
      third = Rational(-1) * inv_pow(2, nu / 2 + 1);
    else
      third = inv_pow(2, nu / 2 + 1);
  } else {
    if (r4 == 3)
      third = 0;
    else if (r8 == 1)
      third = Rational(-1) * inv_pow(2, nu / 2 + 2);
    else if (r16 == 5)
      third = inv_pow(2, nu / 2 + 2);
    else
      third = inv_pow(2, nu / 2 + 1);
  }

  return first + second + third;
}

}  // namespace detail

}  // namespace avroot
