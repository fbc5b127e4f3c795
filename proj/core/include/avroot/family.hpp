#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "avroot/numeric.hpp"

namespace avroot {

// The one-parameter surface y^2 = x^3 + 3t x^2 + 3s x + st, selected by a
// nonzero integer s. Specializing t in Z gives the curves this library
// averages over.
struct FamilyParam {
  Int s;
  explicit FamilyParam(Int s_) : s(std::move(s_)) {
    if (s == 0) throw std::invalid_argument("FamilyParam: s must be nonzero");
  }
};

struct CurveInvariants {
  Int c4;
  Int c6;
  Int disc;
  std::optional<Rational> j;  // absent exactly when disc = 0
};

// Weierstrass invariants of the specialization at t:
//   c4 = 144 (t^2 - s),  c6 = -1728 t (t^2 - s),  disc = -1728 s (t^2 - s)^2,
//   j  = -1728 (t^2 - s) / s  when disc != 0.
CurveInvariants invariants(const FamilyParam& fam, const Int& t);

// The specialization is an elliptic curve iff t^2 != s.
bool is_smooth(const FamilyParam& fam, const Int& t);

// Washington's curves y^2 = x^3 + tx^2 - a(t+3a)x + a^3 sit inside this
// family: parameter a at t maps to (s, t') = (-972 a^2, 12t + 18a).
std::pair<FamilyParam, Int> from_washington(const Int& a, const Int& t);

// The subfamily y^2 = x^3 + 3tx^2 + 3atx + a^2 t maps to (4a^2, 4t - 2a).
std::pair<FamilyParam, Int> from_v_family(const Int& a, const Int& t);

// Polynomials (ascending coefficients) entering the averaging framework:
// the product over multiplicative places away from -deg (constant 1 for this
// family) and the quite-bad-reduction polynomial x^2 - s.
struct FrameworkConstants {
  std::vector<Int> multiplicative_places;  // [1]
  std::vector<Int> quite_bad_places;       // [-s, 0, 1]
};

FrameworkConstants framework_constants(const FamilyParam& fam);

}  // namespace avroot
