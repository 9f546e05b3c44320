// Exact q-expansions: Eisenstein series, products, the four weight 4/6 forms,
// CM coefficients and multiplicative coefficient sequences.
#pragma once

#include <gmpxx.h>

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lcong/arith.hpp"

namespace lcong {

// Coefficients c_0..c_{n_max}; value of c_i is num[i] / den.
struct PowerSeries {
  std::vector<mpz_class> num;
  mpz_class den = 1;

  long n_max() const { return static_cast<long>(num.size()) - 1; }
  mpq_class coeff(long n) const;
  void normalize();
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const mpq_class& c, const PowerSeries& a);
// f(q) -> f(q^t), same truncation.
PowerSeries dilate(const PowerSeries& a, long t);

// E_k(q) = -B_k/(2k) + sum sigma_{k-1}(n) q^n.
PowerSeries eisenstein(int k, long n_max);
// E_2(q) - t E_2(q^t).
PowerSeries e2star(long t, long n_max);
mpq_class bernoulli(int k);

// Integer sequence a_1..a_n stored as int64, widened to mpz on overflow.
class IntSeq {
 public:
  IntSeq() = default;
  explicit IntSeq(long n_max) : small_(static_cast<size_t>(n_max) + 1, 0) {}
  long n_max() const { return static_cast<long>(wide_ ? big_.size() : small_.size()) - 1; }
  bool wide() const { return wide_; }
  mpz_class get(long n) const { return wide_ ? big_[n] : mpz_class(static_cast<long>(small_[n])); }
  i64 small(long n) const { return small_[n]; }  // only valid when !wide()
  void set(long n, const mpz_class& v);
  void set_small(long n, i64 v) { small_[n] = v; }
  const std::vector<i64>& small_data() const { return small_; }
  void widen();

 private:
  std::vector<i64> small_;
  std::vector<mpz_class> big_;
  bool wide_ = false;
};

// One factor E_k(q^t) (or E_2^*(q^t) when star).
struct SeriesFactor {
  int k;
  long t;
  bool star = false;
};
struct ComboTerm {
  mpq_class coeff;
  std::vector<SeriesFactor> factors;
};
struct EisensteinCombo {
  std::vector<ComboTerm> terms;
};
// Weierstrass a1,a2,a3,a4,a6 of an elliptic curve with CM by Q(sqrt(-D)).
struct CMCurve {
  std::array<long, 5> a;
  long conductor;
  long cm_disc;  // D with CM field Q(sqrt(-D)), D = 11 for the conductor-121 curve
};

struct FormSpec {
  std::string id;
  long level;
  int weight;
  std::variant<EisensteinCombo, CMCurve> source;
};

struct Form {
  std::string id;
  long level;
  int weight;
  std::variant<EisensteinCombo, CMCurve> source;
  IntSeq coeffs;  // a_1..a_n_max (index 0 unused)

  long n_max() const { return coeffs.n_max(); }
  mpz_class a(long n) const { return coeffs.get(n); }
  i64 a_small(long n) const { return coeffs.small(n); }
  int ord_level(long q) const;
};

// Built-in forms: "5w4", "7w4", "5w6", "121w4".
FormSpec named_form(const std::string& id);
std::vector<std::string> named_form_ids();
// "level=5;weight=4;-250/3*E4(q^5)-10/3*E4(q)+13*E2s(q^5)*E2s(q^5)" or a built-in id.
FormSpec parse_form_descriptor(const std::string& text);

struct NotEigenform : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Form build_form(const FormSpec& spec, long n_max);
PowerSeries combo_series(const EisensteinCombo& combo, long n_max);
// Same combination evaluated with plain rational arithmetic (reference path).
std::vector<mpq_class> combo_series_rational(const EisensteinCombo& combo, long n_max);

// d_p = p + 1 - #E(F_p) by direct counting.
long cm_trace_naive(const CMCurve& e, long p);
// d_p from 4p = x^2 + D y^2; 0 when p is inert. sign is the global normalization.
long cm_trace_fast(long p, long D, int sign);
Form cm_coefficients(const CMCurve& e, int k, long n_max, long naive_limit = 2000);

// Fills a multiplicative sequence from prime-power values; pp(q, e) must return
// the coefficient at q^e for every prime power q^e <= n_max.
IntSeq multiplicative_fill(long n_max, const Sieve& sieve, const std::function<mpz_class(long, int)>& pp);

struct ArtinRep;
// b_1..b_n of L(f, rep, s) = prod_q P_q(f, rep, q^-s)^-1.
IntSeq twisted_dirichlet_coeffs(const Form& f, const ArtinRep& rep, long n_max);

// Coefficient cache: "QSER1 level weight n_max" then one a_n per line.
void write_cache(const Form& f, const std::string& path);
std::optional<Form> read_cache(const FormSpec& spec, long n_max, const std::string& path);
std::string cache_path(const std::string& dir, const FormSpec& spec);

// Loads from cache_dir when a large enough cache exists, builds and saves otherwise.
Form load_or_build(const FormSpec& spec, long n_max, const std::string& cache_dir);

}  // namespace lcong
