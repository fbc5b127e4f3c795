#include "avroot/family.hpp"

namespace avroot {

CurveInvariants invariants(const FamilyParam& fam, const Int& t) {
  const Int& s = fam.s;
  Int d = t * t - s;
  CurveInvariants inv;
  inv.c4 = 144 * d;
  inv.c6 = -1728 * t * d;
  inv.disc = -1728 * s * d * d;
  if (inv.disc != 0) inv.j = Rational(-1728 * d, s);
  return inv;
}

bool is_smooth(const FamilyParam& fam, const Int& t) { return t * t != fam.s; }

std::pair<FamilyParam, Int> from_washington(const Int& a, const Int& t) {
  if (a == 0) throw std::invalid_argument("from_washington: a must be nonzero");
  return {FamilyParam(-972 * a * a), 12 * t + 18 * a};
}

std::pair<FamilyParam, Int> from_v_family(const Int& a, const Int& t) {
  if (a == 0) throw std::invalid_argument("from_v_family: a must be nonzero");
  return {FamilyParam(4 * a * a), 4 * t - 2 * a};
}

FrameworkConstants framework_constants(const FamilyParam& fam) {
  return {{Int(1)}, {-fam.s, Int(0), Int(1)}};
}

}  // namespace avroot
