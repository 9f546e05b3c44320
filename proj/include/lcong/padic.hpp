// p-adic numbers of fixed relative precision, the unit root, the normalized
// values M_p and ℒ_p, congruence verdicts and the A_n/B_n post-processing.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "lcong/artin.hpp"
#include "lcong/qseries.hpp"

namespace lcong {

// p^val * unit with unit a p-adic unit known mod p^prec; a zero carries the
// absolute precision O(p^val) or is exact.
class PadicNumber {
 public:
  PadicNumber() = default;
  static PadicNumber from_rational(const mpq_class& x, long p, int prec);
  static PadicNumber exact_zero(long p);
  static PadicNumber zero_mod(long p, long abs_prec);
  // p^val * unit (unit reduced mod p^prec, must be prime to p).
  static PadicNumber from_parts(long p, long val, const mpz_class& unit, int prec);

  long p() const { return p_; }
  bool is_zero() const { return zero_; }
  bool is_exact_zero() const { return zero_ && exact_; }
  // Valuation; for an inexact zero, the absolute precision.
  long valuation() const { return val_; }
  int prec() const { return prec_; }
  // Absolute precision: the value is known mod p^abs_prec (huge for exact zero).
  long abs_prec() const;
  const mpz_class& unit() const { return unit_; }
  // First p-adic digit of the unit part.
  long leading_digit() const;
  // "2+O(3)", "1*3^2+O(3^3)", "0" (exact zero), "O(3^4)" (inexact zero).
  std::string residue_string() const;
  // Digits d_v, ..., d_{v+r-1}: "2*3^1+1*3^2+O(3^3)".
  std::string expansion(int r) const;

  PadicNumber operator-() const;
  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);
  PadicNumber pow(long e) const;

 private:
  long p_ = 3;
  long val_ = 0;
  mpz_class unit_ = 0;
  int prec_ = 0;
  bool zero_ = true;
  bool exact_ = true;
  mpz_class modulus() const;
  void normalize(long abs_prec);
};

// Root of X^2 - a_p X + p^{k-1} with α ≡ a_p mod p (requires p ∤ N a_p).
PadicNumber unit_root(const Form& f, long p, int prec);

// Factors of M_p(f,φ,n) and ℒ_p(f,φ,n).
struct ScriptL {
  PadicNumber value;           // ℒ_p
  PadicNumber m_value;         // M_p
  mpq_class euler_product;     // 𝒫_p = ∏_{q | pm} P_q(f,φ,q^{-n})
  mpq_class gamma_factor;      // Γ(n)^{d(φ)}
  PadicNumber interpolation;   // P_p(φ̂, p^{n-1}/α) / P_p(φ, α/p^n) · (p^{n-1}/α)^{e_p}
};

// m enters through the primes q | m in the Euler product (also for σ).
ScriptL script_l(const Form& f, const ArtinRep& rep, long m, int n, const mpq_class& lstar, int prec = 12);
PadicNumber m_p_value(const Form& f, const ArtinRep& rep, int n, const mpq_class& lstar, int prec = 12);
// c₊^{-d⁺_n} c₋^{-d⁻_n} ℒ
PadicNumber script_l_can(const PadicNumber& l, const ArtinRep& rep, int n, const mpq_class& c_plus,
                         const mpq_class& c_minus);

// Ω±^can = c± Ω±; the conductor-121 CM form has c₊ = 22, c₋ = 1/3.
struct PeriodScaling {
  mpq_class c_plus = 1;
  mpq_class c_minus = 1;
};

enum class Verdict { True, False, Inconclusive, NotApplicable };
std::string to_string(Verdict v);

struct CongruenceReport {
  std::string form_id;
  long m = 0;
  int n = 0;
  std::string residue_sigma;
  std::string residue_rho;
  Verdict mod_p = Verdict::Inconclusive;
  Verdict mod_p2 = Verdict::NotApplicable;
  bool central_vanishing = false;
};

CongruenceReport compare_congruence(const std::string& form_id, long m, int n, const PadicNumber& l_sigma,
                                    const PadicNumber& l_rho, bool central_vanishing);

// With L(f,σ,k/2) = 0 every ℒ_p(f,σ,n) lies in pZ_p.
bool manin_divisibility_check(const std::vector<PadicNumber>& l_sigma, bool central_vanishing);

struct BValues {
  mpq_class a_reconciled;  // |L*| M 𝒩(ρ)^{n-1} / 4
  mpq_class a_literal;     // |L*| M^n ε^{n-1} / 4 with ε = 3^{e_3}
  mpq_class b_reconciled;
  mpq_class b_literal;
  std::optional<mpz_class> sqrt_reconciled;
  std::optional<mpz_class> sqrt_literal;
};
// M = product of the primes dividing m other than p.
long radical_prime_to_p(long m, long p);
BValues table_b_values(const ArtinRep& rho, int n, const mpq_class& lstar, const mpq_class& divisor);

}  // namespace lcong
