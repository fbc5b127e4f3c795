#include "avroot/padic_integration.hpp"

#include <memory>
#include <vector>

#include "avroot/arith.hpp"
#include "avroot/local_root.hpp"

namespace avroot {

namespace {

// Largest m with p^m <= budget (at least 1).
unsigned budget_depth(const Int& p, std::uint64_t budget) {
  unsigned m = 0;
  Int power = 1;
  while (power * p <= budget) {
    power *= p;
    ++m;
  }
  return m == 0 ? 1 : m;
}

std::uint64_t nu_of_nonzero(const Int& s, const Int& p) {
  std::uint64_t e = 0;
  Int m = s;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

}  // namespace

IntegralEstimate integrate_adaptive(const ClassEvaluator& evaluator, const Int& p,
                                    unsigned initial_depth, unsigned max_depth,
                                    const AdaptiveOptions& options) {
  if (!is_prime(p)) throw std::invalid_argument("integrate_adaptive: p must be prime");
  if (initial_depth == 0 || max_depth < initial_depth)
    throw std::invalid_argument("integrate_adaptive: need 1 <= initial_depth <= max_depth");

  const Int initial_classes = pow_int(p, initial_depth);
  if (initial_classes > options.class_budget)
    throw class_budget_exceeded("integrate_adaptive: p^initial_depth exceeds the class budget");

  std::uint64_t evaluated = 0;

  auto check_children = [&](const ResidueClass& parent, const Rational& val) {
    // Optional contract check: every subclass of a determined class must
    // evaluate to the same determined value.
    Int step = pow_int(parent.p, parent.depth);
    for (Int c = 0; c < parent.p; ++c) {
      ResidueClass child{parent.p, parent.depth + 1, parent.rep + c * step};
      ++evaluated;
      ClassVerdict v = evaluator(child);
      if (!v.is_determined() || v.value() != val)
        throw contract_violation("integrate_adaptive: determined class with divergent subclass");
    }
  };

  Rational total = 0;
  std::vector<Int> refines;

  {
    // Depth initial_depth: every class.
    const std::uint64_t n = static_cast<std::uint64_t>(initial_classes);
    Rational level_sum = 0;
    for (std::uint64_t r = 0; r < n; ++r) {
      ResidueClass cls{p, initial_depth, Int(r)};
      ++evaluated;
      ClassVerdict v = evaluator(cls);
      if (v.is_determined()) {
        level_sum += v.value();
        if (initial_depth < options.consistency_check_depth) check_children(cls, v.value());
      } else {
        refines.push_back(cls.rep);
      }
    }
    total += level_sum * Rational(Int(1), initial_classes);
  }

  for (unsigned depth = initial_depth + 1; depth <= max_depth && !refines.empty(); ++depth) {
    const Int parent_step = pow_int(p, depth - 1);
    const Int class_count = parent_step * p;
    std::uint64_t children = refines.size() * static_cast<std::uint64_t>(p);
    if (evaluated + children > options.class_budget)
      throw class_budget_exceeded("integrate_adaptive: refinement exceeds the class budget");

    std::vector<Int> next;
    Rational level_sum = 0;
    for (const Int& parent : refines) {
      for (Int c = 0; c < p; ++c) {
        ResidueClass cls{p, depth, parent + c * parent_step};
        ++evaluated;
        ClassVerdict v = evaluator(cls);
        if (v.is_determined()) {
          level_sum += v.value();
          if (depth < options.consistency_check_depth) check_children(cls, v.value());
        } else {
          next.push_back(cls.rep);
        }
      }
    }
    total += level_sum * Rational(Int(1), class_count);
    refines = std::move(next);
  }

  Rational unresolved =
      Rational(Int(refines.size()), pow_int(p, max_depth));
  IntegralEstimate est;
  est.lo = total - unresolved;
  est.hi = total + unresolved;
  est.resolved_mass = Rational(1) - unresolved;
  return est;
}

unsigned default_initial_depth(const Int& p, const Int& s) {
  if (s == 0) throw std::invalid_argument("default_initial_depth: s must be nonzero");
  std::uint64_t nu = nu_of_nonzero(s, p);
  unsigned want = static_cast<unsigned>(nu) + 3;
  unsigned cap = budget_depth(p, kClassBudget);
  return want < cap ? want : cap;
}

unsigned default_max_depth(const Int& p, const Int& s) {
  if (s == 0) throw std::invalid_argument("default_max_depth: s must be nonzero");
  return static_cast<unsigned>(nu_of_nonzero(s, p)) + 12;
}

IntegralEstimate integrate_uniform(const UniformFunction& f, const Int& p,
                                   unsigned tail_depth) {
  if (!is_prime(p)) throw std::invalid_argument("integrate_uniform: p must be prime");
  if (f.eta == 0) throw std::invalid_argument("integrate_uniform: eta must be positive");

  const Int unit_modulus = pow_int(p, f.eta);
  Rational total = 0;
  for (std::uint64_t e = 0; e <= tail_depth; ++e) {
    Rational level_sum = 0;
    for (Int d = 1; d < unit_modulus; ++d) {
      if (d % p == 0) continue;
      level_sum += f.value(e, d);
    }
    total += level_sum * Rational(Int(1), pow_int(p, e + f.eta));
  }
  Rational tail(Int(1), pow_int(p, tail_depth + 1));
  IntegralEstimate est;
  est.lo = total - tail;
  est.hi = total + tail;
  est.resolved_mass = Rational(1) - tail;
  return est;
}

Rational equal_shell_measure_bruteforce(const Int& p, const Int& s, unsigned k) {
  if (p < 5 || !is_prime(p))
    throw std::invalid_argument("equal_shell_measure_bruteforce: p must be a prime >= 5");
  if (s == 0) throw std::invalid_argument("equal_shell_measure_bruteforce: s must be nonzero");
  const std::uint64_t nu = nu_of_nonzero(s, p);
  if (nu % 2 == 1) return 0;

  const std::uint64_t half = nu / 2;
  const std::uint64_t target = nu + k;
  const std::uint64_t mod_exp = half + k + 2;
  const Int modulus = pow_int(p, mod_exp);

  std::uint64_t count = 0;
  const bool fast = modulus <= Int(1) << 31 && abs(s) <= Int(1) << 62;
  if (fast) {
    const std::int64_t pl = static_cast<std::int64_t>(p);
    const std::int64_t n = static_cast<std::int64_t>(modulus);
    const std::int64_t sl = static_cast<std::int64_t>(s);
    for (std::int64_t r = 1; r < n; ++r) {
      std::int64_t m = r;
      std::uint64_t e = 0;
      while (m % pl == 0) {
        m /= pl;
        ++e;
      }
      if (e != half) continue;
      __int128 val = static_cast<__int128>(r) * r - sl;
      std::uint64_t v = 0;
      if (val != 0) {
        while (val % pl == 0) {
          val /= pl;
          ++v;
        }
      } else {
        v = target + 1;  // r^2 = s exactly: valuation beyond any finite target
      }
      if (v == target) ++count;
    }
  } else {
    for (Int r = 1; r < modulus; ++r) {
      Int m = r;
      std::uint64_t e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      if (e != half) continue;
      Int val = r * r - s;
      std::uint64_t v = 0;
      if (val != 0) {
        while (val % p == 0) {
          val /= p;
          ++v;
        }
      } else {
        v = target + 1;
      }
      if (v == target) ++count;
    }
  }
  return Rational(Int(count), modulus);
}

ClassEvaluator modified_root_evaluator(const Int& s, const Int& p) {
  if (s == 0) throw std::invalid_argument("modified_root_evaluator: s must be nonzero");
  if (p < 5)
    throw unsupported_prime("modified_root_evaluator: pointwise values need p >= 5");
  if (!is_prime(p)) throw std::invalid_argument("modified_root_evaluator: p must be prime");

  struct Ctx {
    Int s;
    Int p;
    std::uint64_t nu_s;
    detail::SymbolTable sym;
    bool small;         // fast integer path applicable
    std::int64_t s64;
    std::int64_t p64;
  };
  auto ctx = std::make_shared<Ctx>();
  ctx->s = s;
  ctx->p = p;
  ctx->nu_s = nu_of_nonzero(s, p);
  ctx->sym = detail::SymbolTable(p);
  ctx->small = abs(s) <= Int(1) << 62 && p <= Int(1) << 30;
  ctx->s64 = ctx->small ? static_cast<std::int64_t>(s) : 0;
  ctx->p64 = ctx->small ? static_cast<std::int64_t>(p) : 0;

  return [ctx](const ResidueClass& cls) -> ClassVerdict {
    const std::uint64_t m = cls.depth;

    if (cls.rep == 0) {
      // The class p^m Z_p: once 2m exceeds nu_p(s) the whole class sits in
      // the nu_p(s) < 2 nu_p(t) branch with nu_p(t^2-s) = nu_p(s).
      if (2 * m > ctx->nu_s) {
        detail::RootData d;
        d.nu_t = Valuation::infinite();
        d.nu_s = ctx->nu_s;
        d.nu_tt_minus_s = ctx->nu_s;
        return ClassVerdict::determined(
            Rational(detail::modified_local_root_from_data(d, ctx->sym).value()));
      }
      return ClassVerdict::refine();
    }

    std::uint64_t e = 0, v = 0;
    Int t_unit;
    bool singular = false;

    if (ctx->small && cls.rep <= Int(1) << 31) {
      std::int64_t r = static_cast<std::int64_t>(cls.rep);
      std::int64_t u = r;
      while (u % ctx->p64 == 0) {
        u /= ctx->p64;
        ++e;
      }
      __int128 val = static_cast<__int128>(r) * r - ctx->s64;
      if (val == 0) {
        singular = true;
      } else {
        while (val % ctx->p64 == 0) {
          val /= ctx->p64;
          ++v;
        }
      }
      t_unit = Int(u % ctx->p64);
    } else {
      Int u = cls.rep;
      while (u % ctx->p == 0) {
        u /= ctx->p;
        ++e;
      }
      Int val = cls.rep * cls.rep - ctx->s;
      if (val == 0) {
        singular = true;
      } else {
        while (val % ctx->p == 0) {
          val /= ctx->p;
          ++v;
        }
      }
      t_unit = u % ctx->p;
    }

    // The class pins nu_p(t) = e; it pins nu_p(t^2-s) = v only while v stays
    // below depth + e, and never around an exact square root of s.
    if (singular || v >= m + e) return ClassVerdict::refine();

    detail::RootData d;
    d.nu_t = Valuation(e);
    d.nu_s = ctx->nu_s;
    d.t_unit = t_unit;
    d.nu_tt_minus_s = v;
    return ClassVerdict::determined(
        Rational(detail::modified_local_root_from_data(d, ctx->sym).value()));
  };
}

}  // namespace avroot
