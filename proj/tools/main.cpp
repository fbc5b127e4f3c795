// Command line front end: exact average root numbers, local factors, oracle
// verification, and range scans for the family y^2 = x^3 + 3tx^2 + 3sx + st.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or precondition
// error. All persisted numbers are exact "num/den" strings; decimal fields
// named "approx" are convenience only.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "avroot/arith.hpp"
#include "avroot/average.hpp"
#include "avroot/family.hpp"
#include "avroot/local_factor.hpp"
#include "avroot/local_root.hpp"
#include "avroot/padic_integration.hpp"

namespace {

using avroot::Int;
using avroot::Rational;
using ojson = nlohmann::ordered_json;

class Timer {
 public:
  long long elapsed_ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Int parse_int(const std::string& text, const char* what) {
  try {
    return Int(text);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + ": not an integer: " + text);
  }
}

ojson factor_entry(const Int& p, const Rational& f) {
  return ojson{{"p", p.str()},
               {"num", f.numerator().str()},
               {"den", f.denominator().str()}};
}

void emit(ojson& record, const Timer& timer, bool no_timing) {
  if (!no_timing) record["timing_ms"] = timer.elapsed_ms();
  std::cout << record.dump() << "\n";
}

void write_csv_header(std::ostream& os) {
  os << "# schema=1\n";
  os << "s,parity_biased,sign,lo,hi,E2,E3\n";
}

void write_csv_row(std::ostream& os, const avroot::AverageResult& res) {
  os << res.s.str() << "," << (res.parity_biased ? "true" : "false") << ","
     << res.average_sign.value() << "," << res.lo.str() << "," << res.hi.str() << ","
     << res.exceptional_factors[0].second.str() << ","
     << res.exceptional_factors[1].second.str() << "\n";
}

int run_avg(const Int& s, const Int& cutoff, bool csv, bool no_timing) {
  Timer timer;
  auto res = avroot::average_root_number(s, cutoff);
  if (csv) {
    write_csv_header(std::cout);
    write_csv_row(std::cout, res);
    return 0;
  }
  ojson record;
  record["command"] = "avg";
  record["s"] = res.s.str();
  record["cutoff"] = res.cutoff.str();
  record["parity_biased"] = res.parity_biased;
  record["sign"] = res.average_sign.value();
  record["interval"] = ojson{{"lo", res.lo.str()}, {"hi", res.hi.str()}};
  record["approx"] = ojson{{"lo", avroot::approx_decimal(res.lo)},
                           {"hi", avroot::approx_decimal(res.hi)}};
  record["finite_product"] = res.finite_product.str();
  ojson exceptional = ojson::array();
  for (const auto& [p, f] : res.exceptional_factors) exceptional.push_back(factor_entry(p, f));
  record["exceptional_factors"] = exceptional;
  ojson generic = ojson::array();
  for (const auto& [p, f] : res.generic_factors) generic.push_back(factor_entry(p, f));
  record["generic_factors"] = generic;
  emit(record, timer, no_timing);
  return 0;
}

int run_factor(const Int& s, const Int& p, bool no_timing) {
  Timer timer;
  if (!avroot::is_prime(p)) throw std::invalid_argument("factor: p must be prime");
  Rational less, greater, equal;
  if (p == 2) {
    less = avroot::local_factor_2_region(s, avroot::Region::less_than);
    greater = avroot::local_factor_2_region(s, avroot::Region::greater_than);
    equal = avroot::local_factor_2_region(s, avroot::Region::equal);
  } else if (p == 3) {
    less = avroot::local_factor_3_region(s, avroot::Region::less_than);
    greater = avroot::local_factor_3_region(s, avroot::Region::greater_than);
    equal = avroot::local_factor_3_region(s, avroot::Region::equal);
  } else {
    less = avroot::local_factor_ge5_region(p, s, avroot::Region::less_than);
    greater = avroot::local_factor_ge5_region(p, s, avroot::Region::greater_than);
    equal = avroot::local_factor_ge5_region(p, s, avroot::Region::equal);
  }
  Rational total = less + greater + equal;

  ojson record;
  record["command"] = "factor";
  record["s"] = s.str();
  record["p"] = p.str();
  record["factor"] = total.str();
  record["approx"] = avroot::approx_decimal(total);
  record["regions"] = ojson{{"less", less.str()},
                            {"greater", greater.str()},
                            {"equal", equal.str()}};
  emit(record, timer, no_timing);
  return 0;
}

int run_verify(const Int& s, const Int& p, std::optional<unsigned> depth,
               std::optional<unsigned> initial_depth, bool no_timing) {
  Timer timer;
  if (p < 5) {
    std::cerr << "pointwise w_p unavailable for p<5\n";
    return 2;
  }
  if (!avroot::is_prime(p)) throw std::invalid_argument("verify: p must be prime");
  unsigned max_depth = depth.value_or(avroot::default_max_depth(p, s));
  unsigned init = initial_depth.value_or(avroot::default_initial_depth(p, s));
  if (init > max_depth) init = max_depth;

  auto est = avroot::integrate_adaptive(avroot::modified_root_evaluator(s, p), p,
                                        init, max_depth);
  Rational closed = avroot::local_factor_ge5(p, s);

  const char* verdict;
  if (est.is_exact() && est.lo == closed)
    verdict = "EXACT";
  else if (est.contains(closed))
    verdict = "CONTAINED";
  else
    verdict = "FAIL";

  ojson record;
  record["command"] = "verify";
  record["s"] = s.str();
  record["p"] = p.str();
  record["initial_depth"] = init;
  record["max_depth"] = max_depth;
  record["oracle"] = ojson{{"lo", est.lo.str()},
                           {"hi", est.hi.str()},
                           {"width", est.width().str()},
                           {"resolved_mass", est.resolved_mass.str()}};
  record["closed_form"] = closed.str();
  record["verdict"] = verdict;
  emit(record, timer, no_timing);
  return verdict == std::string("FAIL") ? 1 : 0;
}

int run_scan(const Int& from, const Int& to, const Int& cutoff,
             const std::string& csv_path) {
  if (from > to) throw std::invalid_argument("scan: need from <= to");
  std::ofstream file;
  if (!csv_path.empty()) {
    file.open(csv_path);
    if (!file) throw std::invalid_argument("scan: cannot write " + csv_path);
  }
  std::ostream& os = csv_path.empty() ? std::cout : file;
  write_csv_header(os);
  for (Int s = from; s <= to; ++s) {
    if (s == 0) continue;
    write_csv_row(os, avroot::average_root_number(s, cutoff));
  }
  return 0;
}

int run_invariants(const Int& s, const Int& t, bool no_timing) {
  Timer timer;
  auto inv = avroot::invariants(avroot::FamilyParam(s), t);
  ojson record;
  record["command"] = "invariants";
  record["s"] = s.str();
  record["t"] = t.str();
  record["c4"] = inv.c4.str();
  record["c6"] = inv.c6.str();
  record["disc"] = inv.disc.str();
  record["j"] = inv.j.has_value() ? inv.j->str() : "singular";
  emit(record, timer, no_timing);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact average root numbers for y^2 = x^3 + 3tx^2 + 3sx + st"};
  app.require_subcommand(1);
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "omit timing fields from records");

  std::string s_str, p_str, t_str, from_str, to_str;
  std::string cutoff_str = "100000";
  std::string csv_path;
  bool as_json = false, as_csv = false;
  std::optional<unsigned> depth, initial_depth;

  auto* avg = app.add_subcommand("avg", "average root number over the integers");
  avg->fallthrough();
  avg->add_option("--s", s_str, "family parameter, nonzero")->required();
  avg->add_option("--cutoff", cutoff_str, "prime cutoff for generic factors");
  avg->add_flag("--json", as_json, "emit a JSON record (default)");
  avg->add_flag("--csv", as_csv, "emit a CSV row instead of JSON");

  auto* factor = app.add_subcommand("factor", "one local factor E(p), with regions");
  factor->fallthrough();
  factor->add_option("--s", s_str)->required();
  factor->add_option("--p", p_str, "prime")->required();

  auto* verify = app.add_subcommand("verify", "closed form vs adaptive p-adic oracle");
  verify->fallthrough();
  verify->add_option("--s", s_str)->required();
  verify->add_option("--p", p_str, "prime >= 5")->required();
  unsigned depth_arg = 0, init_arg = 0;
  auto* depth_opt = verify->add_option("--depth", depth_arg, "maximum refinement depth");
  auto* init_opt = verify->add_option("--initial-depth", init_arg, "starting depth");

  auto* scan = app.add_subcommand("scan", "CSV scan over a range of s");
  scan->fallthrough();
  scan->add_option("--from", from_str)->required();
  scan->add_option("--to", to_str)->required();
  scan->add_option("--cutoff", cutoff_str);
  scan->add_option("--csv", csv_path, "output path (stdout when omitted)");

  auto* invariants = app.add_subcommand("invariants", "Weierstrass data of one member");
  invariants->fallthrough();
  invariants->add_option("--s", s_str)->required();
  invariants->add_option("--t", t_str)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*depth_opt) depth = depth_arg;
  if (*init_opt) initial_depth = init_arg;

  try {
    if (avg->parsed() || scan->parsed() || factor->parsed() || verify->parsed() ||
        invariants->parsed()) {
      if (!s_str.empty() && !scan->parsed() && parse_int(s_str, "s") == 0) {
        std::cerr << "s must be nonzero\n";
        return 2;
      }
    }
    if (avg->parsed())
      return run_avg(parse_int(s_str, "s"), parse_int(cutoff_str, "cutoff"), as_csv,
                     no_timing);
    if (factor->parsed())
      return run_factor(parse_int(s_str, "s"), parse_int(p_str, "p"), no_timing);
    if (verify->parsed())
      return run_verify(parse_int(s_str, "s"), parse_int(p_str, "p"), depth,
                        initial_depth, no_timing);
    if (scan->parsed())
      return run_scan(parse_int(from_str, "from"), parse_int(to_str, "to"),
                      parse_int(cutoff_str, "cutoff"), csv_path);
    if (invariants->parsed())
      return run_invariants(parse_int(s_str, "s"), parse_int(t_str, "t"), no_timing);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
