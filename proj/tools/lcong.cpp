#include <cstdlib>
#include <iostream>
#include <numeric>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcong/iwasawa.hpp"
#include "lcong/pipeline.hpp"
#include "lcong/report.hpp"
#include "lcong/tables.hpp"

using namespace lcong;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kMismatch = 1, kInconclusive = 2, kRefused = 3 };

struct Config {
  std::string form = "5w4";
  std::vector<long> m;
  std::vector<int> n;
  int digits = 40;
  long budget = 40'000'000;
  std::string periods = "naive";
  std::string c_plus, c_minus;
  std::string format = "tsv";
  std::string cache_dir;
  long n_max = 30;
  std::string rep = "sigma";
  std::vector<double> s;
  bool solve = false;
};

RunOptions run_options(const Config& c) {
  RunOptions o;
  o.digits = c.digits;
  o.budget = c.budget;
  o.cache_dir = c.cache_dir;
  if (const char* env = std::getenv("LCONG_CACHE_DIR")) o.cache_dir = env;
  o.periods = c.periods == "canonical" ? PeriodMode::Canonical : PeriodMode::Naive;
  if (!c.c_plus.empty() || !c.c_minus.empty()) {
    PeriodScaling sc = period_scaling(c.form);
    if (!c.c_plus.empty()) sc.c_plus = parse_factored(c.c_plus);
    if (!c.c_minus.empty()) sc.c_minus = parse_factored(c.c_minus);
    o.scaling = sc;
  }
  o.solve_root_numbers = c.solve;
  return o;
}

// Table m-values for a form, in table order.
std::vector<long> table_ms(const std::string& form) {
  std::vector<long> ms;
  for (const auto& r : table_rows())
    if (form == r.form && std::find(ms.begin(), ms.end(), r.m) == ms.end()) ms.push_back(r.m);
  return ms;
}

// Table m-values within the budget; the others are reported on stderr.
std::vector<long> default_ms(const Config& c, const RunOptions& o) {
  std::vector<long> ms, skipped;
  FormSpec spec = resolve_form(c.form);
  for (long m : table_ms(c.form)) (row_demand(spec, o.p, m, o) <= o.budget ? ms : skipped).push_back(m);
  if (!skipped.empty()) {
    std::cerr << "skipping m beyond the budget of " << o.budget << " coefficients:";
    for (long m : skipped) std::cerr << ' ' << m;
    std::cerr << "\n";
  }
  return ms;
}

int refusal(const ResourceRefusal& e, const Config& c, const RunOptions& o) {
  std::cerr << "refused: " << e.what() << "\n";
  long m_max = c.m.empty() ? 12 : *std::max_element(c.m.begin(), c.m.end());
  auto ok = feasible_m(resolve_form(c.form), o.p, std::max(m_max, 12L), o);
  std::cerr << "feasible m under budget " << o.budget << ":";
  for (long m : ok) std::cerr << ' ' << m;
  std::cerr << "\n";
  return kRefused;
}

int cmd_coeffs(const Config& c) {
  RunOptions o = run_options(c);
  FormSpec spec = resolve_form(c.form);
  if (c.n_max > o.budget) {
    std::cerr << "refused: " << c.n_max << " coefficients exceed the budget of " << o.budget << "\n";
    return kRefused;
  }
  Form f = o.cache_dir.empty() ? build_form(spec, c.n_max) : load_or_build(spec, c.n_max, o.cache_dir);
  const long shown = std::min<long>(30, f.n_max());
  mpz_class checksum = 0;
  for (long i = 1; i <= shown; ++i) checksum = (checksum * 1000003 + f.a(i)) % mpz_class("2305843009213693951");
  if (c.format == "json") {
    json j = {{"form", spec.id}, {"level", spec.level}, {"weight", spec.weight}, {"n_max", f.n_max()}};
    for (long i = 1; i <= shown; ++i) j["coefficients"].push_back(f.a(i).get_str());
    j["checksum"] = checksum.get_str();
    if (!o.cache_dir.empty()) j["cache"] = cache_path(o.cache_dir, spec);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "form\t" << spec.id << "\nn_max\t" << f.n_max() << "\n";
    for (long i = 1; i <= shown; ++i) std::cout << "a_" << i << "\t" << f.a(i).get_str() << "\n";
    std::cout << "checksum\t" << checksum.get_str() << "\n";
    if (!o.cache_dir.empty()) std::cout << "cache\t" << cache_path(o.cache_dir, spec) << "\n";
  }
  return kPass;
}

int cmd_table_row(const Config& c) {
  RunOptions o = run_options(c);
  Session s(o);
  std::vector<long> ms = c.m.empty() ? default_ms(c, o) : c.m;
  int exit_code = kPass;
  json rows = json::array();
  if (c.format == "tsv") std::cout << row_tsv_header() << "\n";
  for (long m : ms) {
    std::vector<int> ns = c.n;
    if (ns.empty()) {
      int top = table_max_n(c.form);
      if (top == 0) top = resolve_form(c.form).weight - 1;
      ns.resize(static_cast<size_t>(top));
      std::iota(ns.begin(), ns.end(), 1);
    }
    std::vector<RowResult> res;
    try {
      res = compute_rows(s, c.form, m, ns);
    } catch (const ResourceRefusal& e) {
      return refusal(e, c, o);
    } catch (const std::runtime_error& e) {
      std::cerr << "inconclusive: " << e.what() << "\n";
      exit_code = std::max<int>(exit_code, kInconclusive);
      continue;
    }
    for (const auto& r : res) {
      FixtureComparison fx = compare_with_fixture(r);
      if (!fx.ok()) exit_code = kMismatch;
      if (c.format == "json")
        rows.push_back(row_json(r, fx));
      else
        std::cout << row_tsv(r, fx) << std::endl;
    }
  }
  if (c.format == "json") std::cout << rows.dump(2) << "\n";
  return exit_code;
}

int cmd_root_numbers(const Config& c) {
  RunOptions o = run_options(c);
  Session s(o);
  FormSpec spec = resolve_form(c.form);
  std::vector<long> ms = c.m.empty() ? default_ms(c, o) : c.m;
  int exit_code = kPass;
  json out = json::array();
  auto report = [&](const ArtinRep& rep) {
    Form shell_need = build_form(spec, 1);
    long need = coefficient_demand(shell_need, rep, o.solve_digits, 1.15);
    if (need > o.budget) throw ResourceRefusal(rep.name() + ": demand " + std::to_string(need), need, o.budget);
    const Form& f = s.form(c.form, need);
    TwistedLData data = make_ldata(f, rep, need, std::nullopt);
    RootNumberSolve rs = solve_root_number(data, o.solve_digits);
    int formula = rep.kind == RepKind::Dirichlet ? 0 : global_root_number(f, rep);
    bool within = std::abs(std::abs(rs.raw) - 1) < 1e-10;
    bool agree = formula == 0 || (within && rs.w == formula);
    if (!within) exit_code = std::max<int>(exit_code, kInconclusive);
    if (!agree) exit_code = kMismatch;
    json j = {{"form", spec.id}, {"rep", rep.name()}, {"solved", rs.raw}, {"formula", formula},
              {"conductor", factored(data.conductor)}, {"agree", agree}};
    if (c.format == "json")
      out.push_back(j);
    else
      std::cout << spec.id << '\t' << rep.name() << '\t' << factored(data.conductor) << '\t' << rs.raw << '\t'
                << formula << '\t' << (agree ? "agree" : "DISAGREE") << std::endl;
  };
  if (c.format == "tsv") std::cout << "form\trep\tN\tsolved\tformula\tverdict\n";
  try {
    report(ArtinRep::sigma(o.p));
    for (long m : ms) report(ArtinRep::rho(o.p, m));
  } catch (const ResourceRefusal& e) {
    return refusal(e, c, o);
  }
  if (c.format == "json") std::cout << out.dump(2) << "\n";
  return exit_code;
}

ArtinRep rep_from(const Config& c, long p) {
  if (c.rep == "sigma") return ArtinRep::sigma(p);
  if (c.rep == "trivial") return ArtinRep::trivial();
  if (c.rep == "chi-3") return ArtinRep::chi_minus3();
  if (c.rep == "rho") {
    if (c.m.size() != 1) throw CLI::ValidationError("--m", "rho needs exactly one m");
    return ArtinRep::rho(p, c.m[0]);
  }
  throw CLI::ValidationError("--rep", "unknown representation " + c.rep);
}

int cmd_lambda(const Config& c) {
  RunOptions o = run_options(c);
  Session s(o);
  FormSpec spec = resolve_form(c.form);
  ArtinRep rep = rep_from(c, o.p);
  long need = coefficient_demand(build_form(spec, 1), rep, c.digits, 1.3);
  if (need > o.budget) {
    std::cerr << "refused: " << rep.name() << " needs " << need << " coefficients, budget " << o.budget << "\n";
    return kRefused;
  }
  const Form& f = s.form(c.form, need);
  TwistedLData data = make_ldata(f, rep, need, std::nullopt);
  if (data.w == 0) data.w = solve_root_number(data, std::min(c.digits, 24)).w;
  std::vector<double> ss = c.s.empty() ? std::vector<double>{spec.weight / 2.0 + 0.3} : c.s;
  const mpfr_prec_t P = digits_to_bits(c.digits) + 32;
  json out = json::array();
  if (c.format == "tsv") std::cout << "s\tLambda(s)\tresidual\tw\n";
  for (double sv : ss) {
    Real s_r(sv, P);
    CriticalValue v = evaluate_lambda(data, s_r, c.digits);
    Real res = functional_equation_residual(data, s_r, c.digits);
    if (c.format == "json")
      out.push_back({{"s", sv}, {"lambda", v.numeric.str(c.digits)}, {"residual", res.str(3)}, {"w", data.w}});
    else
      std::cout << sv << '\t' << v.numeric.str(c.digits) << '\t' << res.str(3) << '\t' << data.w << "\n";
  }
  if (c.format == "json") std::cout << out.dump(2) << "\n";
  return kPass;
}

struct Suite {
  int failures = 0;
  int inconclusive = 0;
  void line(bool ok, const std::string& what) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << std::endl;
    if (!ok) ++failures;
  }
};

int cmd_verify(const Config& c) {
  RunOptions o = run_options(c);
  o.solve_root_numbers = true;
  Session s(o);
  Suite su;
  std::vector<long> ms = c.m.empty() ? default_ms(c, o) : c.m;
  FormSpec spec = resolve_form(c.form);
  const bool strict_p2 = c.form == "7w4" || (c.form == "121w4" && o.periods == PeriodMode::Canonical);
  std::vector<PadicNumber> manin;
  bool vanishing = false;
  for (long m : ms) {
    std::vector<RowResult> rows;
    try {
      std::vector<int> ns(static_cast<size_t>(spec.weight - 1));
      std::iota(ns.begin(), ns.end(), 1);
      rows = compute_rows(s, c.form, m, ns);
    } catch (const ResourceRefusal& e) {
      return refusal(e, c, o);
    } catch (const std::runtime_error& e) {
      std::cout << "inconclusive m=" << m << ": " << e.what() << "\n";
      ++su.inconclusive;
      continue;
    }
    for (const auto& r : rows) {
      std::string tag = c.form + " m=" + std::to_string(m) + " n=" + std::to_string(r.n);
      FixtureComparison fx = compare_with_fixture(r);
      if (fx.has_fixture) {
        std::string detail;
        for (const auto& x : fx.mismatches) detail += " [" + x + "]";
        su.line(fx.ok(), "table " + tag + detail);
      }
      if (r.congruence.mod_p == Verdict::Inconclusive) ++su.inconclusive;
      su.line(r.congruence.mod_p != Verdict::False, "mod p   " + tag + " " + r.congruence.residue_sigma + " vs " +
                                                        r.congruence.residue_rho);
      if (strict_p2) {
        if (r.congruence.mod_p2 == Verdict::Inconclusive) ++su.inconclusive;
        su.line(r.congruence.mod_p2 != Verdict::False, "mod p^2 " + tag);
      }
      manin.push_back(r.cmp_sigma);
      vanishing = r.congruence.central_vanishing;
    }
    const auto& first = rows.front();
    if (first.w_solved) {
      bool within = std::abs(std::abs(first.w_solved->raw) - 1) < 1e-10;
      su.line(within && first.w_solved->w == first.w_formula,
              "root number " + c.form + " rho m=" + std::to_string(m) + " solved " +
                  std::to_string(first.w_solved->raw) + " formula " + std::to_string(first.w_formula));
    }
    if (auto spec_b = find_b_spec(c.form)) {
      if (auto brow = find_b_row(c.form, m)) {
        for (int i = 0; i < spec_b->n_cols; ++i) {
          if (brow->cols[static_cast<size_t>(i)][0] == '\0') continue;
          const RowResult& r = rows[static_cast<size_t>(i)];
          BValues b = table_b_values(ArtinRep::rho(o.p, m), r.n, *r.lstar_rho.exact,
                                     parse_factored(spec_b->divisor[static_cast<size_t>(i)]));
          mpq_class want = parse_factored(brow->cols[static_cast<size_t>(i)]);
          mpq_class got = b.b_reconciled;
          if (spec_b->sqrt_col[static_cast<size_t>(i)]) got = b.sqrt_reconciled ? mpq_class(*b.sqrt_reconciled) : -1;
          su.line(got == want, "B-table " + c.form + " m=" + std::to_string(m) + " B_" + std::to_string(i + 1) +
                                   " = " + factored(got) + (b.b_literal != b.b_reconciled ? " (literal A_n differs)" : ""));
        }
      }
    }
  }
  if (vanishing) su.line(manin_divisibility_check(manin, true), "Manin divisibility " + c.form);
  if (c.form == "121w4") {
    const Periods& per = s.periods(c.form);
    CMPeriodRatios cr = cm_period_ratios(per, c.digits);
    Real rp = abs(cr.plus * Real(22.0, cr.plus.prec()) - Real(1.0, cr.plus.prec()));
    Real rm = abs(cr.minus / Real(3.0, cr.minus.prec()) - Real(1.0, cr.minus.prec()));
    su.line(rp.to_ld() < 1e-20L && rm.to_ld() < 1e-20L,
            "CM periods Omega+/Omega+can = " + cr.plus.str(25) + ", Omega-/Omega-can = " + cr.minus.str(25));
  }
  try {
    const Form& f = s.form(c.form, 1);
    auto sig = ArtinRep::sigma(o.p);
    long need = coefficient_demand(f, sig, o.solve_digits, 1.15);
    const Form& g = s.form(c.form, need);
    RootNumberSolve rs = solve_root_number(make_ldata(g, sig, need, std::nullopt), o.solve_digits);
    int formula = global_root_number(g, sig);
    su.line(std::abs(std::abs(rs.raw) - 1) < 1e-10 && rs.w == formula,
            "root number " + c.form + " sigma solved " + std::to_string(rs.raw) + " formula " + std::to_string(formula));
  } catch (const ResourceRefusal& e) {
    return refusal(e, c, o);
  }
  std::cout << (su.failures ? "FAIL" : su.inconclusive ? "INCONCLUSIVE" : "PASS") << " (" << su.failures
            << " failures, " << su.inconclusive << " inconclusive)\n";
  if (su.failures) return kMismatch;
  return su.inconclusive ? kInconclusive : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical values of twisted modular L-functions and their 3-adic congruences"};
  app.require_subcommand(1);
  Config c;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--form", c.form, "5w4, 7w4, 5w6, 121w4 or a form descriptor");
    sub->add_option("--digits", c.digits, "working precision in decimal digits")->check(CLI::Range(10, 400));
    sub->add_option("--budget", c.budget, "maximum number of coefficients");
    sub->add_option("--format", c.format)->check(CLI::IsMember({"tsv", "json"}));
    sub->add_option("--cache-dir", c.cache_dir, "coefficient cache directory (LCONG_CACHE_DIR overrides)");
  };
  auto rows = [&](CLI::App* sub) {
    sub->add_option("--m", c.m, "m values (default: the table rows)")->delimiter(',');
    sub->add_option("--n", c.n, "n values (default: all table columns)")->delimiter(',');
    sub->add_option("--periods", c.periods)->check(CLI::IsMember({"naive", "canonical"}));
    sub->add_option("--c-plus", c.c_plus, "canonical scaling c+ (Ω+can = c+ Ω+)");
    sub->add_option("--c-minus", c.c_minus, "canonical scaling c-");
  };
  auto* coeffs = app.add_subcommand("coeffs", "build or load the q-expansion and print a_1..a_30");
  common(coeffs);
  coeffs->add_option("--n-max,--n", c.n_max, "number of coefficients")->check(CLI::PositiveNumber);
  auto* table_row = app.add_subcommand("table-row", "reproduce rows of the reference tables");
  common(table_row);
  rows(table_row);
  table_row->add_flag("--solve-root-numbers", c.solve, "also solve w numerically");
  auto* verify = app.add_subcommand("verify", "congruence, root-number, period and B-table suites");
  common(verify);
  rows(verify);
  auto* lambda = app.add_subcommand("lambda", "Λ(f,φ,s) at real s with the functional-equation residual");
  common(lambda);
  lambda->add_option("--rep", c.rep)->check(CLI::IsMember({"sigma", "rho", "trivial", "chi-3"}));
  lambda->add_option("--m", c.m)->delimiter(',');
  lambda->add_option("--s", c.s, "real points")->delimiter(',');
  auto* roots = app.add_subcommand("root-numbers", "solved versus formula root numbers for σ and ρ");
  common(roots);
  roots->add_option("--m", c.m)->delimiter(',');
  CLI11_PARSE(app, argc, argv);
  try {
    if (*coeffs) return cmd_coeffs(c);
    if (*table_row) return cmd_table_row(c);
    if (*verify) return cmd_verify(c);
    if (*lambda) return cmd_lambda(c);
    if (*roots) return cmd_root_numbers(c);
  } catch (const ResourceRefusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const InsufficientCoefficients& e) {
    std::cerr << "inconclusive: " << e.what() << " (needed " << e.needed << ")\n";
    return kInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kPass;
}
