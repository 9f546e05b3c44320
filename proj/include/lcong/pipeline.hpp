// Row-level computation shared by the CLI and the acceptance checks: form
// loading with a coefficient budget, L* for σ and ρ, 𝒫₃, ℒ₃ residues,
// root numbers and comparison against the reference tables.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lcong/artin.hpp"
#include "lcong/lfunc.hpp"
#include "lcong/padic.hpp"
#include "lcong/qseries.hpp"

namespace lcong {

enum class PeriodMode { Naive, Canonical };

struct RunOptions {
  int digits = 40;
  int padic_prec = 12;
  long budget = 40'000'000;  // coefficients
  std::string cache_dir;     // empty: no disk cache
  PeriodMode periods = PeriodMode::Naive;
  std::optional<PeriodScaling> scaling;  // canonical c±; default per form
  bool solve_root_numbers = false;
  int solve_digits = 20;
  long p = 3;
};

struct ResourceRefusal : std::runtime_error {
  ResourceRefusal(const std::string& what, long need, long cap)
      : std::runtime_error(what), demand(need), budget(cap) {}
  long demand;
  long budget;
};

// Built-in id ("5w4") or a descriptor accepted by parse_form_descriptor.
FormSpec resolve_form(const std::string& id);
// Coefficients needed for L*(f,ρ_{p,m},n) (and the root-number solve when requested).
long row_demand(const FormSpec& spec, long p, long m, const RunOptions& opt);
// Largest m' <= m_max whose row demand fits the budget.
std::vector<long> feasible_m(const FormSpec& spec, long p, long m_max, const RunOptions& opt);
// Canonical scaling Ω±^can = c± Ω± (identity unless the form is the conductor-121 CM form).
PeriodScaling period_scaling(const std::string& form_id);

class Session {
 public:
  explicit Session(RunOptions opt) : opt_(std::move(opt)) {}
  const RunOptions& options() const { return opt_; }
  const Form& form(const std::string& id, long n_needed);
  const Periods& periods(const std::string& id);
  const LStarSet& sigma(const std::string& id);
  const LStarSet& rho(const std::string& id, long m);

 private:
  RunOptions opt_;
  std::map<std::string, std::unique_ptr<Form>> forms_;
  std::map<std::string, Periods> periods_;
  std::map<std::string, LStarSet> sigma_;
  std::map<std::pair<std::string, long>, LStarSet> rho_;
};

struct RowResult {
  std::string form_id;
  long m = 0;
  int n = 0;
  CriticalValue lstar_rho;
  std::optional<mpq_class> lstar_sigma;
  mpq_class p3_rho;
  mpq_class p3_sigma;
  mpz_class conductor_rho;
  ScriptL l_sigma;
  ScriptL l_rho;
  PadicNumber cmp_sigma;  // values entering the congruence (rescaled in canonical mode)
  PadicNumber cmp_rho;
  int w_formula = 0;
  std::optional<RootNumberSolve> w_solved;
  bool h2_override = false;
  CongruenceReport congruence;
};

// Throws ResourceRefusal when the row exceeds the budget.
std::vector<RowResult> compute_rows(Session& s, const std::string& form_id, long m, const std::vector<int>& ns);

struct FixtureComparison {
  bool has_fixture = false;
  std::vector<std::string> mismatches;  // "field: computed vs reference"
  bool ok() const { return mismatches.empty(); }
};
FixtureComparison compare_with_fixture(const RowResult& r);

}  // namespace lcong
