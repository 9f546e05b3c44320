#include "lcong/padic.hpp"

#include <limits>
#include <stdexcept>

#include "lcong/lfunc.hpp"

namespace lcong {

namespace {

constexpr long kExactPrec = std::numeric_limits<long>::max() / 4;

mpz_class zpow_mpz(long p, long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

long strip(mpz_class& x, long p) {
  long v = 0;
  mpz_class pp(p);
  while (x != 0 && mpz_divisible_p(x.get_mpz_t(), pp.get_mpz_t())) {
    x /= p;
    ++v;
  }
  return v;
}

mpz_class inverse_mod(const mpz_class& a, const mpz_class& mod) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw std::domain_error("PadicNumber: inverting a non-unit");
  return r;
}

}  // namespace

PadicNumber PadicNumber::exact_zero(long p) {
  PadicNumber z;
  z.p_ = p;
  z.zero_ = true;
  z.exact_ = true;
  z.val_ = kExactPrec;
  return z;
}

PadicNumber PadicNumber::zero_mod(long p, long abs_prec) {
  PadicNumber z;
  z.p_ = p;
  z.zero_ = true;
  z.exact_ = false;
  z.val_ = abs_prec;
  return z;
}

PadicNumber PadicNumber::from_parts(long p, long val, const mpz_class& unit, int prec) {
  if (prec <= 0 || mpz_divisible_ui_p(unit.get_mpz_t(), static_cast<unsigned long>(p)))
    throw std::invalid_argument("from_parts: unit must be prime to p");
  PadicNumber r;
  r.p_ = p;
  r.zero_ = false;
  r.exact_ = false;
  r.val_ = val;
  r.prec_ = prec;
  mpz_class mod = r.modulus();
  r.unit_ = unit % mod;
  if (r.unit_ < 0) r.unit_ += mod;
  return r;
}

PadicNumber PadicNumber::from_rational(const mpq_class& x, long p, int prec) {
  if (x == 0) return exact_zero(p);
  mpz_class num = x.get_num(), den = x.get_den();
  long v = strip(num, p) - strip(den, p);
  PadicNumber r;
  r.p_ = p;
  r.zero_ = false;
  r.exact_ = false;
  r.val_ = v;
  r.prec_ = prec;
  mpz_class mod = r.modulus();
  r.unit_ = num * inverse_mod(den, mod) % mod;
  if (r.unit_ < 0) r.unit_ += mod;
  return r;
}

mpz_class PadicNumber::modulus() const { return zpow_mpz(p_, prec_); }

long PadicNumber::abs_prec() const {
  if (zero_) return val_;
  return val_ + prec_;
}

long PadicNumber::leading_digit() const {
  if (zero_) return 0;
  return mpz_fdiv_ui(unit_.get_mpz_t(), static_cast<unsigned long>(p_));
}

std::string PadicNumber::residue_string() const { return expansion(1); }

std::string PadicNumber::expansion(int r) const {
  const std::string P = std::to_string(p_);
  auto pw = [&](long e) { return e == 1 ? P : P + "^" + std::to_string(e); };
  if (zero_) return exact_ ? "0" : "O(" + pw(val_) + ")";
  std::string out;
  mpz_class u = unit_;
  int digits = std::min(r, prec_);
  for (int i = 0; i < digits; ++i) {
    long d = mpz_fdiv_ui(u.get_mpz_t(), static_cast<unsigned long>(p_));
    u /= p_;
    if (d == 0) continue;
    if (!out.empty()) out += "+";
    long e = val_ + i;
    out += std::to_string(d);
    if (e != 0) out += "*" + P + "^" + std::to_string(e);
  }
  return out + "+O(" + pw(val_ + digits) + ")";
}

void PadicNumber::normalize(long abs_prec) {
  // unit_ currently holds an integer representing the value / p^val_ modulo p^(abs_prec - val_)
  if (abs_prec <= val_) {
    *this = zero_mod(p_, abs_prec);
    return;
  }
  mpz_class mod = zpow_mpz(p_, abs_prec - val_);
  unit_ %= mod;
  if (unit_ < 0) unit_ += mod;
  if (unit_ == 0) {
    *this = zero_mod(p_, abs_prec);
    return;
  }
  long t = strip(unit_, p_);
  val_ += t;
  prec_ = static_cast<int>(abs_prec - val_);
  zero_ = false;
  exact_ = false;
}

PadicNumber PadicNumber::operator-() const {
  PadicNumber r = *this;
  if (!zero_) r.unit_ = (modulus() - unit_) % modulus();
  return r;
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("PadicNumber: mismatched primes");
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const long abs_prec = std::min(a.abs_prec(), b.abs_prec());
  if (a.zero_ || b.zero_) {
    const PadicNumber& x = a.zero_ ? b : a;
    if (x.zero_ || x.val_ >= abs_prec) return PadicNumber::zero_mod(a.p_, abs_prec);
    PadicNumber r = x;
    r.normalize(abs_prec);
    return r;
  }
  const long v = std::min(a.val_, b.val_);
  PadicNumber r;
  r.p_ = a.p_;
  r.val_ = v;
  r.unit_ = a.unit_ * zpow_mpz(a.p_, a.val_ - v) + b.unit_ * zpow_mpz(a.p_, b.val_ - v);
  r.normalize(abs_prec);
  return r;
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("PadicNumber: mismatched primes");
  if (a.is_exact_zero() || b.is_exact_zero()) return PadicNumber::exact_zero(a.p_);
  if (a.zero_ || b.zero_) {
    return PadicNumber::zero_mod(a.p_, a.val_ + b.val_);
  }
  PadicNumber r;
  r.p_ = a.p_;
  r.zero_ = false;
  r.exact_ = false;
  r.val_ = a.val_ + b.val_;
  r.prec_ = std::min(a.prec_, b.prec_);
  mpz_class mod = r.modulus();
  r.unit_ = a.unit_ * b.unit_ % mod;
  return r;
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
  if (b.zero_) throw std::domain_error("PadicNumber: division by a p-adic zero");
  if (a.is_exact_zero()) return a;
  if (a.zero_) return PadicNumber::zero_mod(a.p_, a.val_ - b.val_);
  PadicNumber r;
  r.p_ = a.p_;
  r.zero_ = false;
  r.exact_ = false;
  r.val_ = a.val_ - b.val_;
  r.prec_ = std::min(a.prec_, b.prec_);
  mpz_class mod = r.modulus();
  r.unit_ = a.unit_ * inverse_mod(b.unit_, mod) % mod;
  return r;
}

PadicNumber PadicNumber::pow(long e) const {
  if (e == 0) return from_rational(1, p_, zero_ ? 64 : prec_);
  if (e < 0) return from_rational(1, p_, prec_) / pow(-e);
  PadicNumber r = *this;
  for (long i = 1; i < e; ++i) r = r * *this;
  return r;
}

PadicNumber unit_root(const Form& f, long p, int prec) {
  if (f.level % p == 0) throw std::invalid_argument("unit_root: p divides the level");
  mpz_class ap = f.a(p);
  if (mpz_divisible_ui_p(ap.get_mpz_t(), static_cast<unsigned long>(p)))
    throw std::invalid_argument("unit_root: p is not ordinary");
  const mpz_class mod = zpow_mpz(p, prec);
  const mpz_class c = zpow(p, static_cast<unsigned>(f.weight - 1));
  mpz_class x = ap % mod;
  if (x < 0) x += mod;
  // Newton on g(X) = X^2 - a_p X + p^{k-1}; g'(α) ≡ a_p is a unit
  for (int it = 0; it < 2 * prec + 4; ++it) {
    mpz_class g = (x * x - ap * x + c) % mod;
    if (g == 0) break;
    mpz_class d = (2 * x - ap) % mod;
    if (d < 0) d += mod;
    x = (x - g * inverse_mod(d, mod)) % mod;
    if (x < 0) x += mod;
  }
  return PadicNumber::from_rational(mpq_class(x), p, prec);
}

namespace {

PadicNumber eval_padic(const Poly& P, const PadicNumber& x, int prec) {
  PadicNumber acc = PadicNumber::exact_zero(x.p());
  for (size_t i = P.size(); i-- > 0;) {
    acc = acc * x + PadicNumber::from_rational(mpq_class(P[i]), x.p(), prec + 8);
  }
  return acc;
}

mpq_class euler_at(const Form& f, const ArtinRep& rep, long q, int n) {
  Poly P = twisted_euler_factor(f, rep, q);
  mpq_class x(1, zpow(q, static_cast<unsigned>(n)));
  return poly_eval(P, x);
}

}  // namespace

ScriptL script_l(const Form& f, const ArtinRep& rep, long m, int n, const mpq_class& lstar, int prec) {
  const long p = rep.p;
  if (n < 1 || n >= f.weight) throw std::invalid_argument("script_l: need 1 <= n <= k-1");
  const int wp = prec + 2 * f.weight + 8;
  ScriptL out;
  mpz_class g = 1;
  for (int i = 2; i < n; ++i) g *= i;
  out.gamma_factor = mpq_class(g * g);
  if (rep.dim() == 1) out.gamma_factor = mpq_class(g);
  out.euler_product = euler_at(f, rep, p, n);
  mpq_class prime_to_p = 1;
  for (i64 q : prime_divisors(m)) {
    if (q == p) continue;
    prime_to_p *= euler_at(f, rep, q, n);
  }
  out.euler_product *= prime_to_p;

  PadicNumber alpha = unit_root(f, p, wp);
  PadicNumber pn = PadicNumber::from_rational(mpq_class(zpow(p, static_cast<unsigned>(n))), p, wp);
  PadicNumber pn1 = PadicNumber::from_rational(mpq_class(zpow(p, static_cast<unsigned>(n - 1))), p, wp);
  // φ is self-dual, so P_p(φ̂, X) = P_p(φ, X)
  Poly Pphi = artin_local_factor(rep, p);
  PadicNumber num = eval_padic(Pphi, pn1 / alpha, wp);
  PadicNumber den = eval_padic(Pphi, alpha / pn, wp);
  if (den.is_zero()) throw std::logic_error("script_l: P_p(φ, α/p^n) vanishes p-adically");
  out.interpolation = num / den * (pn1 / alpha).pow(conductor_exponent_p(rep));

  mpq_class head = out.gamma_factor * lstar * (out.euler_product / (prime_to_p == 0 ? mpq_class(1) : prime_to_p));
  if (prime_to_p == 0) head = out.gamma_factor * lstar * euler_at(f, rep, p, n);
  out.m_value = head == 0 ? PadicNumber::exact_zero(p) : PadicNumber::from_rational(head, p, wp) * out.interpolation;
  out.value = prime_to_p == 0 ? PadicNumber::exact_zero(p)
                              : out.m_value * PadicNumber::from_rational(prime_to_p, p, wp);
  return out;
}

PadicNumber m_p_value(const Form& f, const ArtinRep& rep, int n, const mpq_class& lstar, int prec) {
  long m = rep.kind == RepKind::Rho ? rep.m : 1;
  return script_l(f, rep, m, n, lstar, prec).m_value;
}

PadicNumber script_l_can(const PadicNumber& l, const ArtinRep& rep, int n, const mpq_class& c_plus,
                         const mpq_class& c_minus) {
  if (c_plus == 0 || c_minus == 0) throw std::invalid_argument("script_l_can: periods scaling must be nonzero");
  auto [dp, dm] = d_plus_minus(rep, n);
  const int prec = l.is_zero() ? 32 : l.prec();
  PadicNumber cp = PadicNumber::from_rational(c_plus, l.p(), prec).pow(-dp);
  PadicNumber cm = PadicNumber::from_rational(c_minus, l.p(), prec).pow(-dm);
  return l * cp * cm;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::NotApplicable: return "n/a";
  }
  return "?";
}

CongruenceReport compare_congruence(const std::string& form_id, long m, int n, const PadicNumber& l_sigma,
                                    const PadicNumber& l_rho, bool central_vanishing) {
  CongruenceReport r;
  r.form_id = form_id;
  r.m = m;
  r.n = n;
  r.residue_sigma = l_sigma.residue_string();
  r.residue_rho = l_rho.residue_string();
  r.central_vanishing = central_vanishing;
  PadicNumber d = l_sigma - l_rho;
  auto at_least = [&](long k) {
    if (d.is_exact_zero()) return Verdict::True;
    if (d.is_zero()) return d.valuation() >= k ? Verdict::True : Verdict::Inconclusive;
    return d.valuation() >= k ? Verdict::True : Verdict::False;
  };
  r.mod_p = at_least(1);
  r.mod_p2 = central_vanishing ? at_least(2) : Verdict::NotApplicable;
  return r;
}

bool manin_divisibility_check(const std::vector<PadicNumber>& l_sigma, bool central_vanishing) {
  if (!central_vanishing) return true;
  for (const auto& x : l_sigma)
    if (!x.is_exact_zero() && !(x.is_zero() && x.valuation() >= 1) && x.valuation() < 1) return false;
  return true;
}

long radical_prime_to_p(long m, long p) {
  long M = 1;
  for (i64 q : prime_divisors(m))
    if (q != p) M *= q;
  return M;
}

namespace {

std::optional<mpz_class> rational_sqrt(const mpq_class& x) {
  if (x < 0) return std::nullopt;
  if (x.get_den() != 1) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t())) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), x.get_num_mpz_t());
  return r;
}

}  // namespace

BValues table_b_values(const ArtinRep& rho, int n, const mpq_class& lstar, const mpq_class& divisor) {
  if (rho.kind != RepKind::Rho) throw std::invalid_argument("table_b_values: rho representation required");
  const long M = radical_prime_to_p(rho.m, rho.p);
  mpq_class L = abs(lstar);
  BValues b;
  b.a_reconciled = L * M * mpq_class(zpow(conductor(rho), static_cast<unsigned>(n - 1))) / 4;
  HalfPower eps = epsilon_stated(rho);
  mpz_class eps_int = zpow(eps.base, static_cast<unsigned>(eps.num / eps.den));
  mpz_class eps_pow;
  mpz_pow_ui(eps_pow.get_mpz_t(), eps_int.get_mpz_t(), static_cast<unsigned long>(n - 1));
  b.a_literal = L * mpq_class(zpow(M, static_cast<unsigned>(n))) * mpq_class(eps_pow) / 4;
  b.a_reconciled.canonicalize();
  b.a_literal.canonicalize();
  b.b_reconciled = b.a_reconciled / divisor;
  b.b_literal = b.a_literal / divisor;
  b.sqrt_reconciled = rational_sqrt(b.b_reconciled);
  b.sqrt_literal = rational_sqrt(b.b_literal);
  return b;
}

}  // namespace lcong
