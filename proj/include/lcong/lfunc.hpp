// Twisted L-functions L(f, φ, s): Euler factors, conductors, the smoothed
// functional-equation evaluation of Λ, root numbers, periods and L*.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcong/artin.hpp"
#include "lcong/bessel.hpp"
#include "lcong/poly.hpp"
#include "lcong/qseries.hpp"
#include "lcong/real.hpp"

namespace lcong {

Poly euler_factor_f(const Form& f, long q);
// α_q^r + β_q^r for q ∤ N.
mpz_class frobenius_trace_bv(const Form& f, long q, int r);
Poly twisted_euler_factor(const Form& f, const ArtinRep& rep, long q);
// Coefficients 0..deg of twisted_euler_factor; throws OverflowError if int128 is exceeded.
std::vector<i128> twisted_euler_factor_trunc(const Form& f, const ArtinRep& rep, long q, int deg);

struct InsufficientCoefficients : std::runtime_error {
  InsufficientCoefficients(const std::string& what, long need) : std::runtime_error(what), needed(need) {}
  long needed;
};

struct H2Violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// N(f, φ). With allow_override, H2 violations use the invariants-based exponent 2·dim.
mpz_class conductor_twisted(const Form& f, const ArtinRep& rep, bool allow_override = true);
int gamma_multiplicity(const ArtinRep& rep);

struct TwistedLData {
  const Form* form = nullptr;
  ArtinRep rep;
  mpz_class conductor;
  int d = 1;
  int k = 4;
  int w = 0;  // 0 until known
  bool h2_override = false;
  IntSeq b;
  long n_avail = 0;
};

// B = sqrt(N)/(2π)^d
Real scale_B(const TwistedLData& data, mpfr_prec_t prec);
// Coefficients needed for `digits` accuracy at split factor c >= 1.
long coefficient_demand(const Form& f, const ArtinRep& rep, int digits, double c = 1.0);
TwistedLData make_ldata(const Form& f, const ArtinRep& rep, long n_coeffs, std::optional<int> w = std::nullopt);

struct CriticalValue {
  Real numeric{256};
  Real error{64};
  std::optional<mpq_class> exact;
  bool sqrt_p_absorbed = false;
  std::string note;
};

// Continued-fraction reconstruction of x with |x - p/q| <= err; accepted only
// when q^2 * err <= 10^-margin.
std::optional<mpq_class> reconstruct_rational(const Real& x, const Real& err, int margin = 6);

// Φ_s(B') for s = 1..k-1 at scale B' (index s); see lfunc.cpp.
struct PhiSums {
  std::vector<Real> phi;
  std::vector<Real> err;
  SweepResult sweep;
};
PhiSums phi_sums(const TwistedLData& data, const Real& Bp, int digits);

// L(f, φ, s) at s = 1..k-1 (index s) with error bounds.
struct CriticalLValues {
  std::vector<Real> L;
  std::vector<Real> err;
  SweepResult sweep;
};
CriticalLValues critical_values(const TwistedLData& data, int digits);

// Λ(s) for real s with the integral split at c (slow path; small conductors).
Real lambda_split(const TwistedLData& data, const Real& s, const Real& c, int digits);
CriticalValue evaluate_lambda(const TwistedLData& data, const Real& s, int digits);
// |Λ_{c1}(s) - w Λ_{c2}(k - s)| for two independent split points.
Real functional_equation_residual(const TwistedLData& data, const Real& s, int digits);

struct RootNumberSolve {
  int w = 0;
  double raw = 0;
};
// Solves Λ_c(s0) = F(c) + w H(c) at two split points.
RootNumberSolve solve_root_number(const TwistedLData& data, int digits = 24);

struct Periods {
  Real omega_plus{256};
  Real omega_minus_im{256};  // Ω₋ = i·omega_minus_im
  int w = 0;
  Real L1{256}, L2{256};
};
Periods periods(const Form& f, int digits);

struct CMPeriodRatios {
  Real plus{256};
  Real minus{256};
};
// Ω±/Ω±^can for the conductor-121 CM form from Γ(1/11)Γ(3/11)Γ(4/11)Γ(5/11)Γ(9/11).
CMPeriodRatios cm_period_ratios(const Periods& per, int digits);

struct LStarSet {
  std::vector<CriticalValue> values;  // index n = 1..k-1
  int w = 0;
  mpz_class conductor;
  SweepResult sweep;
  bool h2_override = false;
};
LStarSet lstar_all(const Form& f, const ArtinRep& rep, const Periods& per, int digits,
                   std::optional<int> w = std::nullopt);
CriticalValue lstar(const Form& f, const ArtinRep& rep, int n, int digits);
// ε_p(φ) as a real number (1 for characters).
Real epsilon_value(const ArtinRep& rep, mpfr_prec_t prec);

bool central_vanishing(const Form& f, const ArtinRep& rep, int digits);

}  // namespace lcong
