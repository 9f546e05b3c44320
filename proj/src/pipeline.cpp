#include "lcong/pipeline.hpp"

#include <algorithm>

#include "lcong/arith.hpp"
#include "lcong/tables.hpp"

namespace lcong {

namespace {

bool is_named_id(const std::string& id) {
  auto ids = named_form_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

Form shell(const FormSpec& spec) {
  Form f;
  f.id = spec.id;
  f.level = spec.level;
  f.weight = spec.weight;
  f.source = spec.source;
  return f;
}

std::string opt_str(const std::optional<mpq_class>& x) { return x ? factored(*x) : "?"; }

}  // namespace

FormSpec resolve_form(const std::string& id) { return is_named_id(id) ? named_form(id) : parse_form_descriptor(id); }

long row_demand(const FormSpec& spec, long p, long m, const RunOptions& opt) {
  Form f = shell(spec);
  auto rho = ArtinRep::rho(p, m);
  long need = std::max(coefficient_demand(f, rho, opt.digits), coefficient_demand(f, ArtinRep::sigma(p), opt.digits));
  need = std::max(need, coefficient_demand(f, ArtinRep::trivial(), opt.digits + 10, 1.15));
  if (opt.solve_root_numbers) need = std::max(need, coefficient_demand(f, rho, opt.solve_digits, 1.15));
  return need;
}

std::vector<long> feasible_m(const FormSpec& spec, long p, long m_max, const RunOptions& opt) {
  std::vector<long> out;
  for (long m = 2; m <= m_max; ++m) {
    if (m % p == 0 && m / p % p == 0) continue;
    bool cube_free = true;
    for (auto [q, e] : factor(static_cast<i64>(m)))
      if (e >= static_cast<int>(p)) cube_free = false;
    if (cube_free && row_demand(spec, p, m, opt) <= opt.budget) out.push_back(m);
  }
  return out;
}

PeriodScaling period_scaling(const std::string& form_id) {
  PeriodScaling s;
  if (form_id == "121w4") {
    s.c_plus = 22;
    s.c_minus = mpq_class(1, 3);
  }
  return s;
}

const Form& Session::form(const std::string& id, long n_needed) {
  auto it = forms_.find(id);
  if (it != forms_.end() && it->second->n_max() >= n_needed) return *it->second;
  if (n_needed > opt_.budget)
    throw ResourceRefusal(id + ": " + std::to_string(n_needed) + " coefficients exceed the budget of " +
                              std::to_string(opt_.budget),
                          n_needed, opt_.budget);
  FormSpec spec = resolve_form(id);
  auto f = std::make_unique<Form>(opt_.cache_dir.empty() ? build_form(spec, n_needed)
                                                         : load_or_build(spec, n_needed, opt_.cache_dir));
  const Form& ref = *f;
  forms_[id] = std::move(f);
  return ref;
}

const Periods& Session::periods(const std::string& id) {
  auto it = periods_.find(id);
  if (it != periods_.end()) return it->second;
  FormSpec spec = resolve_form(id);
  const int dg = opt_.digits + 10;
  const Form& f = form(id, coefficient_demand(shell(spec), ArtinRep::trivial(), dg, 1.15));
  return periods_.emplace(id, lcong::periods(f, dg)).first->second;
}

const LStarSet& Session::sigma(const std::string& id) {
  auto it = sigma_.find(id);
  if (it != sigma_.end()) return it->second;
  const Periods& per = periods(id);
  FormSpec spec = resolve_form(id);
  auto sig = ArtinRep::sigma(opt_.p);
  const Form& f = form(id, coefficient_demand(shell(spec), sig, opt_.digits));
  return sigma_.emplace(id, lstar_all(f, sig, per, opt_.digits)).first->second;
}

const LStarSet& Session::rho(const std::string& id, long m) {
  auto key = std::make_pair(id, m);
  auto it = rho_.find(key);
  if (it != rho_.end()) return it->second;
  const Periods& per = periods(id);
  FormSpec spec = resolve_form(id);
  auto rep = ArtinRep::rho(opt_.p, m);
  const Form& f = form(id, coefficient_demand(shell(spec), rep, opt_.digits));
  return rho_.emplace(key, lstar_all(f, rep, per, opt_.digits)).first->second;
}

std::vector<RowResult> compute_rows(Session& s, const std::string& form_id, long m, const std::vector<int>& ns) {
  const RunOptions& opt = s.options();
  FormSpec spec = resolve_form(form_id);
  long need = row_demand(spec, opt.p, m, opt);
  if (need > opt.budget)
    throw ResourceRefusal(form_id + " m=" + std::to_string(m) + ": needs " + std::to_string(need) +
                              " coefficients, budget " + std::to_string(opt.budget),
                          need, opt.budget);
  s.form(form_id, need);
  const LStarSet& sig = s.sigma(form_id);
  const LStarSet& rh = s.rho(form_id, m);
  const Form& f = s.form(form_id, need);
  auto sigma_rep = ArtinRep::sigma(opt.p);
  auto rho_rep = ArtinRep::rho(opt.p, m);
  std::optional<RootNumberSolve> solved;
  if (opt.solve_root_numbers) {
    long need2 = coefficient_demand(f, rho_rep, opt.solve_digits, 1.15);
    TwistedLData data = make_ldata(f, rho_rep, need2, std::nullopt);
    solved = solve_root_number(data, opt.solve_digits);
  }
  const bool vanish = f.weight % 2 == 0 && sig.values[static_cast<size_t>(f.weight / 2)].exact &&
                      *sig.values[static_cast<size_t>(f.weight / 2)].exact == 0;
  PeriodScaling sc = opt.scaling ? *opt.scaling : period_scaling(form_id);
  std::vector<RowResult> out;
  for (int n : ns) {
    if (n < 1 || n >= f.weight) throw std::invalid_argument("n must lie in [1, k-1]");
    RowResult r;
    r.form_id = form_id;
    r.m = m;
    r.n = n;
    r.lstar_rho = rh.values[static_cast<size_t>(n)];
    r.lstar_sigma = sig.values[static_cast<size_t>(n)].exact;
    r.conductor_rho = rh.conductor;
    r.w_formula = rh.w;
    r.w_solved = solved;
    r.h2_override = rh.h2_override;
    if (!r.lstar_rho.exact || !r.lstar_sigma)
      throw std::runtime_error(form_id + " m=" + std::to_string(m) + " n=" + std::to_string(n) +
                               ": L* not recognised as rational at the working precision");
    r.l_sigma = script_l(f, sigma_rep, m, n, *r.lstar_sigma, opt.padic_prec);
    r.l_rho = script_l(f, rho_rep, m, n, *r.lstar_rho.exact, opt.padic_prec);
    r.p3_sigma = r.l_sigma.euler_product;
    r.p3_rho = r.l_rho.euler_product;
    PadicNumber ls = r.l_sigma.value, lr = r.l_rho.value;
    if (opt.periods == PeriodMode::Canonical) {
      ls = script_l_can(ls, sigma_rep, n, sc.c_plus, sc.c_minus);
      lr = script_l_can(lr, rho_rep, n, sc.c_plus, sc.c_minus);
    }
    r.cmp_sigma = ls;
    r.cmp_rho = lr;
    r.congruence = compare_congruence(form_id, m, n, ls, lr, vanish);
    out.push_back(std::move(r));
  }
  return out;
}

FixtureComparison compare_with_fixture(const RowResult& r) {
  FixtureComparison c;
  auto fx = find_row(r.form_id, r.m, r.n);
  if (!fx) return c;
  c.has_fixture = true;
  auto check = [&](const char* field, const std::string& got, const std::string& want) {
    if (got != want) c.mismatches.push_back(std::string(field) + ": " + got + " vs " + want);
  };
  auto check_q = [&](const char* field, const std::optional<mpq_class>& got, const char* want) {
    if (want[0] == '\0') return;
    if (!got || *got != parse_factored(want)) check(field, opt_str(got), want);
  };
  check_q("L*(rho)", r.lstar_rho.exact, fx->lstar_rho);
  if (fx->p3_rho_printed_zero) {
    if (!r.lstar_rho.exact || *r.lstar_rho.exact != 0) check("P3(rho)", factored(r.p3_rho), fx->p3_rho);
  } else {
    check_q("P3(rho)", r.p3_rho, fx->p3_rho);
  }
  check_q("P3(sigma)", r.p3_sigma, fx->p3_sigma);
  if (fx->conductor[0] != '\0' && mpq_class(r.conductor_rho) != parse_factored(fx->conductor))
    check("N(f,rho)", factored(r.conductor_rho), fx->conductor);
  if (fx->residue_sigma[0] != '\0') check("L3(sigma)", r.l_sigma.value.residue_string(), fx->residue_sigma);
  if (fx->residue_rho[0] != '\0') check("L3(rho)", r.l_rho.value.residue_string(), fx->residue_rho);
  return c;
}

}  // namespace lcong
