#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "avroot/numeric.hpp"

namespace avroot {

// The class rep + p^depth Z_p, rep in [0, p^depth). Classes at a fixed depth
// partition Z_p; each has Haar measure p^{-depth}.
struct ResidueClass {
  Int p;
  unsigned depth;
  Int rep;

  Rational measure() const { return Rational(Int(1), pow_int(p, depth)); }
};

// What an evaluator knows about the integrand on one class: either a single
// exact value taken on the whole class, or a request to subdivide.
class ClassVerdict {
 public:
  static ClassVerdict determined(Rational value) {
    ClassVerdict v;
    v.determined_ = true;
    v.value_ = std::move(value);
    return v;
  }
  static ClassVerdict refine() { return ClassVerdict(); }

  bool is_determined() const { return determined_; }
  const Rational& value() const {
    if (!determined_) throw std::logic_error("ClassVerdict: no value on refine");
    return value_;
  }

 private:
  bool determined_ = false;
  Rational value_;
};

// Exact enclosure of an integral over Z_p: the determined classes contribute
// exactly, the unresolved mass contributes +-1 times its measure.
struct IntegralEstimate {
  Rational lo;
  Rational hi;
  Rational resolved_mass;

  Rational width() const { return hi - lo; }
  bool is_exact() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

using ClassEvaluator = std::function<ClassVerdict(const ResidueClass&)>;

// Hard cap on enumerated classes; exceeding it is an error, not a slowdown.
inline constexpr std::uint64_t kClassBudget = 100'000'000;

class class_budget_exceeded : public std::runtime_error {
 public:
  explicit class_budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Evaluator broke its contract: a determined class whose subclass evaluates
// differently.
class contract_violation : public std::logic_error {
 public:
  explicit contract_violation(const std::string& what) : std::logic_error(what) {}
};

struct AdaptiveOptions {
  std::uint64_t class_budget = kClassBudget;
  // When positive, children of determined classes above this depth are
  // re-evaluated and compared; catches inconsistent evaluators in tests.
  unsigned consistency_check_depth = 0;
};

// Enumerates every class at initial_depth, then refines each undetermined
// class one p-power at a time until determined or max_depth. Returns the
// exact sum over determined classes widened by the unresolved mass (the
// integrand is assumed bounded by 1). Deterministic for fixed inputs.
IntegralEstimate integrate_adaptive(const ClassEvaluator& evaluator, const Int& p,
                                    unsigned initial_depth, unsigned max_depth,
                                    const AdaptiveOptions& options = {});

// Defaults used by the verification commands: start where everything away
// from the p-adic square roots of s resolves, stop nine levels later. The
// initial depth is lowered when p^{nu_p(s)+3} would blow the class budget.
unsigned default_initial_depth(const Int& p, const Int& s);
unsigned default_max_depth(const Int& p, const Int& s);

// A function on Z_p whose value depends only on nu_p(x) and on the unit part
// of x mod p^eta. Locally constant away from 0, hence integrable level by
// level: the integral over {nu_p = e} is sum_d f(d p^e) / p^{e+eta} with d
// running over units mod p^eta.
struct UniformFunction {
  unsigned eta;
  std::function<Rational(std::uint64_t e, const Int& d)> value;
};

// Exact per-level sums for e = 0..tail_depth plus a +-p^{-(tail_depth+1)}
// enclosure of the tail (requires |f| <= 1).
IntegralEstimate integrate_uniform(const UniformFunction& f, const Int& p,
                                   unsigned tail_depth);

// Counting oracle for the measure of
//   {t : nu_p(t) = nu_p(s)/2, nu_p(t^2 - s) = nu_p(s) + k},
// for odd p >= 5: counts residues mod p^{nu/2+k+2} (a modulus at which the
// condition is class-constant) and divides. Returns 0 when nu_p(s) is odd.
Rational equal_shell_measure_bruteforce(const Int& p, const Int& s, unsigned k);

// Evaluator for the modified local root number w_p* of the family member s:
// determines a class as soon as the valuation data pinning w_p* is constant
// on it, and delegates the value to the pointwise implementation.
ClassEvaluator modified_root_evaluator(const Int& s, const Int& p);

}  // namespace avroot
