#include "lcong/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace lcong {

namespace {

// Coefficient rings for the local factor construction: exact mpz and
// overflow-checked int128 (truncated series).
template <class T>
struct Ring;

template <>
struct Ring<mpz_class> {
  static mpz_class add(const mpz_class& a, const mpz_class& b) { return a + b; }
  static mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
  static mpz_class from(const mpz_class& x) { return x; }
  static mpz_class from(long x) { return mpz_class(x); }
};

template <>
struct Ring<i128> {
  static i128 add(i128 a, i128 b) { return checked_add(a, b); }
  static i128 mul(i128 a, i128 b) { return checked_mul(a, b); }
  static i128 from(const mpz_class& x) {
    if (x.fits_slong_p()) return static_cast<i128>(x.get_si());
    if (mpz_sizeinbase(x.get_mpz_t(), 2) > 120) throw OverflowError("int128 conversion");
    mpz_class hi = x >> 60, lo = x - (hi << 60);
    return (static_cast<i128>(hi.get_si()) << 60) + static_cast<i128>(lo.get_si());
  }
  static i128 from(long x) { return x; }
};

template <class T>
using Ser = std::vector<T>;

template <class T>
Ser<T> ser_mul(const Ser<T>& a, const Ser<T>& b, int deg) {
  using R = Ring<T>;
  Ser<T> r(static_cast<size_t>(deg) + 1, T(0));
  for (size_t i = 0; i < a.size() && static_cast<int>(i) <= deg; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size() && static_cast<int>(i + j) <= deg; ++j) {
      if (b[j] == 0) continue;
      r[i + j] = R::add(r[i + j], R::mul(a[i], b[j]));
    }
  }
  return r;
}

template <class T>
Ser<T> ser_pow(const Ser<T>& a, unsigned e, int deg) {
  Ser<T> r(static_cast<size_t>(deg) + 1, T(0));
  r[0] = 1;
  for (unsigned i = 0; i < e; ++i) r = ser_mul(r, a, deg);
  return r;
}

template <class T>
Ser<T> ser_inv(const Ser<T>& a, int deg) {
  using R = Ring<T>;
  Ser<T> r(static_cast<size_t>(deg) + 1, T(0));
  r[0] = 1;
  for (int n = 1; n <= deg; ++n) {
    T acc = 0;
    for (int i = 1; i <= n && i < static_cast<int>(a.size()); ++i)
      if (a[i] != 0) acc = R::add(acc, R::mul(a[i], r[n - i]));
    r[n] = -acc;
  }
  return r;
}

template <class T>
T ring_pow(const T& x, unsigned e) {
  T r = 1;
  for (unsigned i = 0; i < e; ++i) r = Ring<T>::mul(r, x);
  return r;
}

long order_mod(long q, long p) { return static_cast<long>(mult_order(static_cast<u64>(q % p), static_cast<u64>(p))); }

bool rho_unramified_at_p(const ArtinRep& rep) {
  const long p = rep.p;
  mpz_class t = zpow(rep.m % (p * p), static_cast<unsigned>(p - 1));
  return t % (p * p) == 1;
}

// Local factor P_q(f, rep, X) truncated at X^deg.
template <class T>
Ser<T> local_factor(const Form& f, const ArtinRep& rep, long q, int deg) {
  using R = Ring<T>;
  if (q > f.n_max()) throw std::invalid_argument("twisted_euler_factor: a_q not available");
  const int k = f.weight;
  const int ord = f.level % q == 0 ? f.ord_level(q) : 0;
  const T a = R::from(f.a(q));
  auto cpow = [&](unsigned e) { return ring_pow(T(q), static_cast<unsigned>(k - 1) * e); };
  auto sized = [&]() {
    Ser<T> s(static_cast<size_t>(deg) + 1, T(0));
    s[0] = 1;
    return s;
  };
  auto pf = [&]() {
    Ser<T> s = sized();
    if (ord >= 2) return s;
    if (deg >= 1) s[1] = -a;
    if (ord == 0 && deg >= 2) s[2] = cpow(1);
    return s;
  };
  // 1 - t_r X^r + c^r X^{2r}
  auto base = [&](int r) {
    Ser<T> s = sized();
    if (r <= deg) {
      T t0 = 2, t1 = a;
      if (r == 0) t1 = t0;
      T c = r >= 2 ? cpow(1) : T(0);
      for (int j = 2; j <= r; ++j) {
        T t2 = R::add(R::mul(a, t1), -R::mul(c, t0));
        t0 = t1;
        t1 = t2;
      }
      s[static_cast<size_t>(r)] = -t1;
    }
    if (2 * r <= deg) s[static_cast<size_t>(2 * r)] = cpow(static_cast<unsigned>(r));
    return s;
  };
  // artin factor evaluated at a_q X
  auto scaled = [&](const Poly& artin) {
    Ser<T> s = sized();
    T apow = 1;
    for (size_t j = 0; j < artin.size() && static_cast<int>(j) <= deg; ++j) {
      s[j] = R::mul(R::from(artin[j]), apow);
      apow = R::mul(apow, a);
    }
    return s;
  };

  const long p = rep.p;
  switch (rep.kind) {
    case RepKind::Dirichlet: {
      const long chi = rep.chi(q);
      Ser<T> s = sized();
      if (chi == 0 || ord >= 2) return s;
      if (deg >= 1) s[1] = R::mul(T(-chi), a);
      if (ord == 0 && deg >= 2) s[2] = R::mul(T(chi * chi), cpow(1));
      return s;
    }
    case RepKind::Sigma: {
      if (q == p) return pf();
      if (ord >= 2) return sized();
      if (ord == 1) return scaled(artin_local_factor(rep, q));
      const long r = order_mod(q, p);
      return ser_pow(base(static_cast<int>(r)), static_cast<unsigned>((p - 1) / r), deg);
    }
    case RepKind::Rho: {
      if (q == p) return rho_unramified_at_p(rep) ? pf() : sized();
      if (rep.m % q == 0 || ord >= 2) return sized();
      if (ord == 1) return scaled(artin_local_factor(rep, q));
      FrobClass fc = frobenius_class(rep, q);
      if (fc.kind == FrobKind::Identity) return ser_pow(pf(), static_cast<unsigned>(p - 1), deg);
      if (fc.kind == FrobKind::PCycle) return ser_mul(base(static_cast<int>(p)), ser_inv(pf(), deg), deg);
      return ser_pow(base(fc.order), static_cast<unsigned>((p - 1) / fc.order), deg);
    }
  }
  return sized();
}

mpz_class to_mpz(i128 v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return mpz_class(static_cast<long>(v));
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & ~0ULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

std::vector<mpz_class> local_inverse(const Form& f, const ArtinRep& rep, long q, int emax) {
  std::vector<mpz_class> out(static_cast<size_t>(emax) + 1);
  try {
    Ser<i128> inv = ser_inv(local_factor<i128>(f, rep, q, emax), emax);
    for (int e = 0; e <= emax; ++e) out[e] = to_mpz(inv[e]);
  } catch (const OverflowError&) {
    Ser<mpz_class> inv = ser_inv(local_factor<mpz_class>(f, rep, q, emax), emax);
    for (int e = 0; e <= emax; ++e) out[e] = inv[e];
  }
  return out;
}

int max_factor_degree(const ArtinRep& rep) { return rep.kind == RepKind::Dirichlet ? 2 : static_cast<int>(2 * (rep.p - 1)); }

}  // namespace

Poly euler_factor_f(const Form& f, long q) {
  int ord = f.level % q == 0 ? f.ord_level(q) : 0;
  if (ord >= 2) return Poly{1};
  if (ord == 1) return Poly{1, -f.a(q)};
  return Poly{1, -f.a(q), zpow(q, static_cast<unsigned>(f.weight - 1))};
}

mpz_class frobenius_trace_bv(const Form& f, long q, int r) {
  if (f.level % q == 0) throw std::invalid_argument("frobenius_trace_bv: q divides the level");
  if (r < 0) throw std::invalid_argument("frobenius_trace_bv: r must be >= 0");
  mpz_class a = f.a(q), c = zpow(q, static_cast<unsigned>(f.weight - 1));
  mpz_class t0 = 2, t1 = a;
  if (r == 0) return t0;
  for (int j = 2; j <= r; ++j) {
    mpz_class t2 = a * t1 - c * t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

Poly twisted_euler_factor(const Form& f, const ArtinRep& rep, long q) {
  Ser<mpz_class> s = local_factor<mpz_class>(f, rep, q, max_factor_degree(rep));
  Poly out(s.begin(), s.end());
  if (rep.kind == RepKind::Rho && q != rep.p && rep.m % q != 0 && f.level % q != 0 &&
      frobenius_class(rep, q).kind == FrobKind::PCycle) {
    // the series quotient must be an exact polynomial quotient
    Ser<mpz_class> full = local_factor<mpz_class>(f, rep, q, 4 * static_cast<int>(rep.p));
    for (size_t i = out.size(); i < full.size(); ++i)
      if (full[i] != 0) throw std::logic_error("twisted_euler_factor: inexact division by P_q(f,X)");
  }
  poly_trim(out);
  return out;
}

std::vector<i128> twisted_euler_factor_trunc(const Form& f, const ArtinRep& rep, long q, int deg) {
  return local_factor<i128>(f, rep, q, deg);
}

IntSeq twisted_dirichlet_coeffs(const Form& f, const ArtinRep& rep, long n_max) {
  if (f.n_max() < n_max) throw InsufficientCoefficients("twisted_dirichlet_coeffs: form has too few coefficients", n_max);
  Sieve sv(n_max);
  std::unordered_map<long, std::vector<mpz_class>> cache;
  auto pp = [&](long q, int e) -> mpz_class {
    if (e == 1 && q > n_max / q) return local_inverse(f, rep, q, 1)[1];
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, local_inverse(f, rep, q, max_power(n_max, q))).first;
    return it->second[static_cast<size_t>(e)];
  };
  return multiplicative_fill(n_max, sv, pp);
}

int gamma_multiplicity(const ArtinRep& rep) { return rep.dim(); }

mpz_class conductor_twisted(const Form& f, const ArtinRep& rep, bool allow_override) {
  const long N = f.level;
  switch (rep.kind) {
    case RepKind::Dirichlet: {
      long c = rep.char_conductor;
      if (std::gcd(c, N) != 1) throw std::invalid_argument("conductor_twisted: character conductor must be prime to N");
      return mpz_class(N) * c * c;
    }
    case RepKind::Sigma: {
      const long p = rep.p;
      if (N % p == 0) throw std::invalid_argument("conductor_twisted: sigma needs p prime to N");
      return zpow(N, static_cast<unsigned>(p - 1)) * zpow(p, static_cast<unsigned>(2 * (p - 2)));
    }
    case RepKind::Rho: {
      const long p = rep.p;
      if (p != 3) throw std::invalid_argument("conductor_twisted: rho only for p = 3");
      if (N % p == 0) throw std::invalid_argument("conductor_twisted: rho needs p prime to N");
      const int d = rep.dim();
      mpz_class out = zpow(p, static_cast<unsigned>(2 * conductor_exponent_p(rep)));
      for (i64 q : prime_divisors(N)) {
        int ord = f.ord_level(q);
        if (rep.m % q == 0) {
          if (ord >= 2 && !allow_override)
            throw H2Violation("conductor_twisted: q^2 | N with q | m (H2)");
          out *= zpow(q, static_cast<unsigned>(2 * d));
        } else {
          out *= zpow(q, static_cast<unsigned>(d * ord));
        }
      }
      for (i64 q : prime_divisors(rep.m))
        if (q != p && N % q != 0) out *= zpow(q, static_cast<unsigned>(2 * d));
      return out;
    }
  }
  return mpz_class(N);
}

Real scale_B(const TwistedLData& data, mpfr_prec_t prec) {
  Real B(data.conductor, prec);
  B = sqrt(B);
  Real tp = pi(prec);
  mpfr_mul_2ui(tp.get(), tp.get(), 1, MPFR_RNDN);
  for (int i = 0; i < data.d; ++i) B /= tp;
  return B;
}

namespace {

double scale_B_double(const mpz_class& N, int d) { return std::sqrt(N.get_d()) / std::pow(2 * M_PI, d); }

// Smallest x with x - a ln x >= t.
double solve_decay(double a, double t) {
  double x = t + 10;
  for (int it = 0; it < 60; ++it) x = t + a * std::log(std::max(x, 1.0));
  return x;
}

long demand_for(double B, int d, int k, int digits) {
  if (d == 2) return sweep_demand(B, k, digits);
  double x = solve_decay(k + 1.5, digits * std::log(10.0) + 10 + 2.5 * std::log(std::max(B, 1.0)));
  return std::max<long>(16, static_cast<long>(std::ceil(x * B)) + 1);
}

constexpr double kSplit = 1.15;

}  // namespace

long coefficient_demand(const Form& f, const ArtinRep& rep, int digits, double c) {
  mpz_class N = conductor_twisted(f, rep);
  int d = gamma_multiplicity(rep);
  return demand_for(scale_B_double(N, d) * std::max(c, 1.0), d, f.weight, digits);
}

TwistedLData make_ldata(const Form& f, const ArtinRep& rep, long n_coeffs, std::optional<int> w) {
  TwistedLData data;
  data.form = &f;
  data.rep = rep;
  data.conductor = conductor_twisted(f, rep);
  data.d = gamma_multiplicity(rep);
  if (data.d > 2) throw std::invalid_argument("make_ldata: only d(φ) <= 2 is implemented");
  data.k = f.weight;
  data.h2_override = violates_h2(f, rep);
  n_coeffs = std::min(n_coeffs, f.n_max());
  data.b = twisted_dirichlet_coeffs(f, rep, n_coeffs);
  data.n_avail = n_coeffs;
  if (w) {
    data.w = *w;
  } else if (rep.kind != RepKind::Dirichlet) {
    data.w = global_root_number(f, rep);
  }
  return data;
}

std::optional<mpq_class> reconstruct_rational(const Real& x, const Real& err, int margin) {
  const mpfr_prec_t P = x.prec() + 16;
  Real ax = abs(x);
  if (mpfr_cmp(ax.get(), err.get()) <= 0) return mpq_class(0);
  const double lerr = err.is_zero() ? -1e9 : static_cast<double>(err.exponent());
  Real y(P), fl(P), diff(P), qq(P);
  mpfr_set(y.get(), x.get(), MPFR_RNDN);
  mpz_class p0 = 1, q0 = 0, p1, q1 = 1, a;
  mpfr_floor(fl.get(), y.get());
  mpfr_get_z(a.get_mpz_t(), fl.get(), MPFR_RNDN);
  p1 = a;
  for (int it = 0; it < 400; ++it) {
    mpq_class cand(p1, q1);
    cand.canonicalize();
    Real cv(cand, P);
    mpfr_sub(diff.get(), x.get(), cv.get(), MPFR_RNDN);
    mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
    if (mpfr_cmp(diff.get(), err.get()) <= 0) {
      // q^2 * err <= 10^-margin
      double lq = static_cast<double>(mpz_sizeinbase(q1.get_mpz_t(), 2));
      if (2 * lq + lerr <= -margin * 3.3219281) return cand;
      return std::nullopt;
    }
    mpfr_sub(y.get(), y.get(), fl.get(), MPFR_RNDN);
    if (mpfr_zero_p(y.get())) return std::nullopt;
    mpfr_ui_div(y.get(), 1, y.get(), MPFR_RNDN);
    mpfr_floor(fl.get(), y.get());
    mpfr_get_z(a.get_mpz_t(), fl.get(), MPFR_RNDN);
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (static_cast<double>(mpz_sizeinbase(q1.get_mpz_t(), 2)) * 2 + lerr > 0) return std::nullopt;
  }
  return std::nullopt;
}

namespace {

// d = 1: Φ_s(B') = (s-1)! Σ b_n n^{-s} e^{-n/B'} e_s(n/B'), e_s(x) = Σ_{i<s} x^i/i!.
PhiSums phi_sums_d1(const TwistedLData& data, const Real& Bp, int digits) {
  const int k = data.k;
  const mpfr_prec_t P = digits_to_bits(digits) + 32;
  const double Bd = Bp.to_double();
  const double growth = (k - 1) / 2.0 + 1.0;
  const long N = std::min(data.n_avail, data.b.n_max());
  PhiSums out;
  out.phi.assign(static_cast<size_t>(k), Real(P));
  out.err.assign(static_cast<size_t>(k), Real(64));
  std::vector<double> l1(static_cast<size_t>(k), 0.0);
  Real x(P), ex(P), es(P), pw(P), term(P), inv(P), Bl(P), bn(P), nps(P);
  mpfr_set(Bl.get(), Bp.get(), MPFR_RNDN);
  double cb = 0;
  bool stopped = false;
  long n = 1;
  for (; n <= N; ++n) {
    mpz_class b = data.b.get(n);
    if (b != 0) {
      cb = std::max(cb, std::fabs(b.get_d()) / std::pow(static_cast<double>(n), growth));
      mpfr_set_si(x.get(), n, MPFR_RNDN);
      mpfr_div(x.get(), x.get(), Bl.get(), MPFR_RNDN);
      mpfr_neg(ex.get(), x.get(), MPFR_RNDN);
      mpfr_exp(ex.get(), ex.get(), MPFR_RNDN);
      mpfr_set_z(bn.get(), b.get_mpz_t(), MPFR_RNDN);
      mpfr_mul(bn.get(), bn.get(), ex.get(), MPFR_RNDN);
      mpfr_set_ui(es.get(), 0, MPFR_RNDN);
      mpfr_set_ui(pw.get(), 1, MPFR_RNDN);
      mpfr_set(nps.get(), bn.get(), MPFR_RNDN);
      for (int s = 1; s < k; ++s) {
        mpfr_add(es.get(), es.get(), pw.get(), MPFR_RNDN);
        mpfr_mul(pw.get(), pw.get(), x.get(), MPFR_RNDN);
        mpfr_div_ui(pw.get(), pw.get(), static_cast<unsigned long>(s), MPFR_RNDN);
        mpfr_div_ui(nps.get(), nps.get(), static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_mul(term.get(), nps.get(), es.get(), MPFR_RNDN);
        mpfr_add(out.phi[s].get(), out.phi[s].get(), term.get(), MPFR_RNDN);
        l1[s] += std::fabs(mpfr_get_d(term.get(), MPFR_RNDN));
      }
    }
    double xd = static_cast<double>(n) / Bd;
    if (xd > k + growth + 4 && n % 8 == 0) {
      bool ok = true;
      for (int s = 1; s < k && ok; ++s) {
        double lnes = 0, t = 1;
        for (int i = 1; i < s; ++i) {
          t *= xd / i;
          lnes = std::max(lnes, std::log(t));
        }
        lnes += std::log(static_cast<double>(s));
        double lb = std::log(std::max(cb, 1e-300)) + (growth - s) * std::log(static_cast<double>(n)) - xd + lnes +
                    std::log(2 * Bd + 2);
        double leta = std::log(std::max(l1[s], 1e-300)) - (digits + 4) * std::log(10.0);
        if (lb > leta) ok = false;
      }
      if (ok) {
        stopped = true;
        break;
      }
    }
  }
  out.sweep.n_stop = std::min(n, N);
  out.sweep.tail_ok = stopped;
  for (int s = 1; s < k; ++s) {
    Real fact = gamma_int(s, P);
    out.phi[s] *= fact;
    double e = l1[s] * std::pow(2.0, -static_cast<double>(P) + 12) + l1[s] * std::pow(10.0, -digits - 4);
    mpfr_set_d(out.err[s].get(), e * fact.to_double(), MPFR_RNDU);
  }
  return out;
}

}  // namespace

PhiSums phi_sums(const TwistedLData& data, const Real& Bp, int digits) {
  if (data.d == 1) return phi_sums_d1(data, Bp, digits);
  SweepOptions opt;
  opt.digits = digits;
  opt.growth = (data.k - 1) / 2.0 + 1.0;
  PhiSums out;
  out.sweep = bessel_sweep(data.b, data.n_avail, Bp, data.k - 2, opt);
  const mpfr_prec_t P = out.sweep.S[0].prec();
  out.phi.assign(static_cast<size_t>(data.k), Real(P));
  out.err.assign(static_cast<size_t>(data.k), Real(64));
  for (int s = 1; s < data.k; ++s) {
    out.phi[s] = out.sweep.S[s - 1];
    mpfr_div_2ui(out.phi[s].get(), out.phi[s].get(), static_cast<unsigned long>(2 * (s - 1)), MPFR_RNDN);
    out.err[s] = out.sweep.err[s - 1];
    mpfr_div_2ui(out.err[s].get(), out.err[s].get(), static_cast<unsigned long>(2 * (s - 1)), MPFR_RNDU);
  }
  return out;
}

CriticalLValues critical_values(const TwistedLData& data, int digits) {
  if (data.w == 0) throw std::invalid_argument("critical_values: root number unknown");
  const mpfr_prec_t P = digits_to_bits(digits) + 32;
  Real B = scale_B(data, P);
  PhiSums ph = phi_sums(data, B, digits);
  if (!ph.sweep.tail_ok)
    throw InsufficientCoefficients("critical_values: coefficient truncation too short",
                                   coefficient_demand(*data.form, data.rep, digits));
  CriticalLValues out;
  out.sweep = ph.sweep;
  out.L.assign(static_cast<size_t>(data.k), Real(P));
  out.err.assign(static_cast<size_t>(data.k), Real(64));
  const int k = data.k;
  for (int s = 1; s < k; ++s) {
    Real Bw = pow_si(B, k - 2 * s);
    Real v = ph.phi[s] + Bw * ph.phi[k - s] * Real(static_cast<double>(data.w), P);
    Real e = ph.err[s] + Bw * ph.err[k - s];
    Real g = pow_si(gamma_int(s, P), data.d);
    out.L[s] = v / g;
    out.err[s] = e / g;
  }
  return out;
}

namespace {

// G_s(x): incomplete Mellin transform of the kernel (e^{-x} for d=1, 2K_0(2 sqrt x) for d=2).
class KernelG {
 public:
  KernelG(int d, const Real& s, mpfr_prec_t P) : d_(d), P_(P), s_(s), s2_(P), z_(P), u_(P), ch_(P), g_(P), acc_(P), t_(P) {
    mpfr_mul_2ui(s2_.get(), s_.get(), 1, MPFR_RNDN);
    h_ = (M_PI * M_PI) / (static_cast<double>(P) * M_LN2 + 8.0);
  }
  void eval(Real& out, const Real& x) {
    if (d_ == 1) {
      mpfr_gamma_inc(out.get(), s_.get(), x.get(), MPFR_RNDN);
      mpfr_neg(t_.get(), s_.get(), MPFR_RNDN);
      mpfr_pow(t_.get(), x.get(), t_.get(), MPFR_RNDN);
      mpfr_mul(out.get(), out.get(), t_.get(), MPFR_RNDN);
      return;
    }
    // 4 (4x)^{-s} ∫_0^∞ cosh(u)^{-2s} Γ(2s, 2 sqrt(x) cosh u) du, trapezoid rule
    mpfr_sqrt(z_.get(), x.get(), MPFR_RNDN);
    mpfr_mul_2ui(z_.get(), z_.get(), 1, MPFR_RNDN);
    mpfr_set_ui(acc_.get(), 0, MPFR_RNDN);
    for (long i = 0;; ++i) {
      mpfr_set_d(u_.get(), h_ * static_cast<double>(i), MPFR_RNDN);
      mpfr_cosh(ch_.get(), u_.get(), MPFR_RNDN);
      mpfr_mul(t_.get(), z_.get(), ch_.get(), MPFR_RNDN);
      mpfr_gamma_inc(g_.get(), s2_.get(), t_.get(), MPFR_RNDN);
      mpfr_neg(t_.get(), s2_.get(), MPFR_RNDN);
      mpfr_pow(t_.get(), ch_.get(), t_.get(), MPFR_RNDN);
      mpfr_mul(g_.get(), g_.get(), t_.get(), MPFR_RNDN);
      if (i == 0) mpfr_div_2ui(g_.get(), g_.get(), 1, MPFR_RNDN);
      mpfr_add(acc_.get(), acc_.get(), g_.get(), MPFR_RNDN);
      if (i > 4 && (mpfr_zero_p(g_.get()) || mpfr_get_exp(g_.get()) < mpfr_get_exp(acc_.get()) - P_ - 8)) break;
      if (i > 100000) throw std::runtime_error("KernelG: quadrature did not converge");
    }
    mpfr_mul_d(acc_.get(), acc_.get(), h_, MPFR_RNDN);
    mpfr_mul_2ui(t_.get(), x.get(), 2, MPFR_RNDN);
    mpfr_neg(u_.get(), s_.get(), MPFR_RNDN);
    mpfr_pow(t_.get(), t_.get(), u_.get(), MPFR_RNDN);
    mpfr_mul(out.get(), acc_.get(), t_.get(), MPFR_RNDN);
    mpfr_mul_2ui(out.get(), out.get(), 2, MPFR_RNDN);
  }

 private:
  int d_;
  mpfr_prec_t P_;
  Real s_, s2_, z_, u_, ch_, g_, acc_, t_;
  double h_;
};

// c^s Σ b_n G_s(n c / B)
Real split_sum(const TwistedLData& data, const Real& s, const Real& c, const Real& B, mpfr_prec_t P, long n_stop) {
  KernelG G(data.d, s, P);
  Real acc(P), x(P), g(P), cb(P);
  mpfr_div(cb.get(), c.get(), B.get(), MPFR_RNDN);
  for (long n = 1; n <= n_stop; ++n) {
    mpz_class b = data.b.get(n);
    if (b == 0) continue;
    mpfr_mul_si(x.get(), cb.get(), n, MPFR_RNDN);
    G.eval(g, x);
    mpfr_mul_z(g.get(), g.get(), b.get_mpz_t(), MPFR_RNDN);
    acc += g;
  }
  Real cs(P);
  mpfr_pow(cs.get(), c.get(), s.get(), MPFR_RNDN);
  return acc * cs;
}

}  // namespace

Real lambda_split(const TwistedLData& data, const Real& s, const Real& c, int digits) {
  if (data.w == 0) throw std::invalid_argument("lambda_split: root number unknown");
  const mpfr_prec_t P = digits_to_bits(digits) + 32;
  Real B = scale_B(data, P);
  double cd = std::max(c.to_double(), 1.0 / c.to_double());
  long need = demand_for(B.to_double() * cd, data.d, data.k, digits);
  long n_stop = std::min(need, std::min(data.n_avail, data.b.n_max()));
  if (n_stop < need) throw InsufficientCoefficients("lambda_split: coefficient truncation too short", need);
  Real one(1.0, P), kk(static_cast<double>(data.k), P);
  Real cinv = one / c;
  Real ks = kk - s;
  Real a = split_sum(data, s, c, B, P, n_stop);
  Real b = split_sum(data, ks, cinv, B, P, n_stop);
  return a + b * Real(static_cast<double>(data.w), P);
}

CriticalValue evaluate_lambda(const TwistedLData& data, const Real& s, int digits) {
  const mpfr_prec_t P = digits_to_bits(digits) + 32;
  CriticalValue cv;
  cv.numeric = lambda_split(data, s, Real(1.0, P), digits);
  Real other = lambda_split(data, s, Real(kSplit, P), digits);
  cv.error = abs(cv.numeric - other);
  return cv;
}

Real functional_equation_residual(const TwistedLData& data, const Real& s, int digits) {
  const mpfr_prec_t P = digits_to_bits(digits) + 32;
  Real ks = Real(static_cast<double>(data.k), P) - s;
  Real a = lambda_split(data, s, Real(1.0, P), digits);
  Real b = lambda_split(data, ks, Real(kSplit, P), digits);
  return abs(a - b * Real(static_cast<double>(data.w), P));
}

RootNumberSolve solve_root_number(const TwistedLData& data, int digits) {
  const int k = data.k;
  const int s0 = 1;
  const mpfr_prec_t P = digits_to_bits(digits) + 32;
  Real B = scale_B(data, P);
  Real c(kSplit, P);
  Real Bc = B * c, Bdc = B / c;
  PhiSums at1 = phi_sums(data, B, digits);
  PhiSums lo = phi_sums(data, Bdc, digits);
  PhiSums hi = phi_sums(data, Bc, digits);
  if (!at1.sweep.tail_ok || !lo.sweep.tail_ok || !hi.sweep.tail_ok)
    throw InsufficientCoefficients("solve_root_number: coefficient truncation too short",
                                   coefficient_demand(*data.form, data.rep, digits, kSplit));
  // F(c) = B^{s0} Φ_{s0}(B/c), H(c) = B^{k-s0} Φ_{k-s0}(cB)
  Real F1 = at1.phi[s0], Fc = lo.phi[s0];
  Real H1 = at1.phi[k - s0], Hc = hi.phi[k - s0];
  Real num = (Fc - F1) * pow_si(B, s0);
  Real den = (H1 - Hc) * pow_si(B, k - s0);
  Real w = num / den;
  RootNumberSolve out;
  out.raw = w.to_double();
  out.w = out.raw >= 0 ? 1 : -1;
  return out;
}

Periods periods(const Form& f, int digits) {
  ArtinRep triv = ArtinRep::trivial();
  long need = coefficient_demand(f, triv, digits, kSplit);
  if (f.n_max() < need) throw InsufficientCoefficients("periods: form has too few coefficients", need);
  TwistedLData data = make_ldata(f, triv, need);
  RootNumberSolve rs = solve_root_number(data, digits);
  if (std::fabs(std::fabs(rs.raw) - 1.0) > 1e-10) throw std::runtime_error("periods: functional equation inconsistent");
  data.w = rs.w;
  CriticalLValues cv = critical_values(data, digits);
  const mpfr_prec_t P = cv.L[1].prec();
  Periods out;
  out.w = rs.w;
  out.L1 = cv.L[1];
  out.L2 = cv.L[2];
  Real tp = pi(P);
  mpfr_mul_2ui(tp.get(), tp.get(), 1, MPFR_RNDN);
  Real thr(1.0, P);
  mpfr_div_2si(thr.get(), thr.get(), static_cast<long>(digits_to_bits(digits) / 4), MPFR_RNDN);
  if (mpfr_cmpabs(out.L2.get(), thr.get()) < 0) throw std::runtime_error("periods: L(f,2) vanishes (H1 fails)");
  Real wr(static_cast<double>(out.w), P);
  out.omega_plus = wr * out.L2 / (tp * tp);
  out.omega_minus_im = wr * out.L1 / tp;
  return out;
}

CMPeriodRatios cm_period_ratios(const Periods& per, int digits) {
  const mpfr_prec_t P = digits_to_bits(digits) + 32;
  Real theta(1.0, P);
  for (int a : {1, 3, 4, 5, 9}) {
    Real x(P);
    mpfr_set_ui(x.get(), static_cast<unsigned long>(a), MPFR_RNDN);
    mpfr_div_ui(x.get(), x.get(), 11, MPFR_RNDN);
    theta *= gamma(x);
  }
  Real tp = pi(P);
  mpfr_mul_2ui(tp.get(), tp.get(), 1, MPFR_RNDN);
  Real base = pow_si(theta, 3) / pow_si(tp, 9);
  Real plus_can = sqrt(Real(11.0, P)) * base;
  CMPeriodRatios r;
  r.plus = per.omega_plus / plus_can;
  r.minus = per.omega_minus_im / base;
  return r;
}

Real epsilon_value(const ArtinRep& rep, mpfr_prec_t prec) {
  if (rep.kind == RepKind::Dirichlet) return Real(1.0, prec);
  HalfPower e = epsilon_p(rep);
  Real v(static_cast<double>(e.base), prec), ex(prec);
  mpfr_set_si(ex.get(), e.num, MPFR_RNDN);
  mpfr_div_si(ex.get(), ex.get(), e.den, MPFR_RNDN);
  mpfr_pow(v.get(), v.get(), ex.get(), MPFR_RNDN);
  return v;
}

LStarSet lstar_all(const Form& f, const ArtinRep& rep, const Periods& per, int digits, std::optional<int> w) {
  long need = coefficient_demand(f, rep, digits);
  if (f.n_max() < need) throw InsufficientCoefficients("lstar: form has too few coefficients", need);
  TwistedLData data = make_ldata(f, rep, need, w);
  if (data.w == 0) {
    long need2 = coefficient_demand(f, rep, digits, kSplit);
    if (f.n_max() < need2) throw InsufficientCoefficients("lstar: form has too few coefficients", need2);
    data = make_ldata(f, rep, need2, std::nullopt);
    data.w = solve_root_number(data, digits).w;
  }
  CriticalLValues cv = critical_values(data, digits);
  const mpfr_prec_t P = cv.L[1].prec();
  LStarSet out;
  out.w = data.w;
  out.conductor = data.conductor;
  out.sweep = cv.sweep;
  out.h2_override = data.h2_override;
  out.values.resize(static_cast<size_t>(data.k));
  Real eps = epsilon_value(rep, P);
  Real tp = pi(P);
  mpfr_mul_2ui(tp.get(), tp.get(), 1, MPFR_RNDN);
  Real om_m = abs(per.omega_minus_im);
  const bool odd_eps = rep.kind != RepKind::Dirichlet && epsilon_p(rep).num % 2 != 0;
  for (int n = 1; n < data.k; ++n) {
    auto [dp, dm] = d_plus_minus(rep, n);
    const int nd = n * data.d;
    Real den = pow_si(tp, nd) * pow_si(per.omega_plus, dp) * pow_si(om_m, dm);
    if ((nd / 2) % 2 == 1) den = -den;
    CriticalValue& v = out.values[static_cast<size_t>(n)];
    v.numeric = cv.L[n] * eps / den;
    Real rel(P);
    mpfr_set_ui(rel.get(), 1, MPFR_RNDN);
    mpfr_div_2si(rel.get(), rel.get(), static_cast<long>(digits_to_bits(digits) + 8), MPFR_RNDN);
    v.error = cv.err[n] * eps / abs(den) + abs(v.numeric) * rel;
    v.sqrt_p_absorbed = odd_eps;
    if (nd % 2 == 1) v.note = "odd power of 2πi: real part convention";
    v.exact = reconstruct_rational(v.numeric, v.error);
  }
  return out;
}

CriticalValue lstar(const Form& f, const ArtinRep& rep, int n, int digits) {
  if (n < 1 || n >= f.weight) throw std::invalid_argument("lstar: need 1 <= n <= k-1");
  Periods per = periods(f, digits + 10);
  return lstar_all(f, rep, per, digits).values[static_cast<size_t>(n)];
}

bool central_vanishing(const Form& f, const ArtinRep& rep, int digits) {
  if (f.weight % 2 != 0) return false;
  long need = coefficient_demand(f, rep, digits);
  if (f.n_max() < need) throw InsufficientCoefficients("central_vanishing: form has too few coefficients", need);
  TwistedLData data = make_ldata(f, rep, need);
  if (data.w == 0) {
    long need2 = coefficient_demand(f, rep, digits, kSplit);
    data = make_ldata(f, rep, need2);
    data.w = solve_root_number(data, digits).w;
  }
  CriticalLValues cv = critical_values(data, digits);
  const Real& L = cv.L[static_cast<size_t>(f.weight / 2)];
  Real thr(1.0, L.prec());
  mpfr_div_2si(thr.get(), thr.get(), static_cast<long>(digits_to_bits(digits) / 4), MPFR_RNDN);
  bool vanish = mpfr_cmpabs(L.get(), thr.get()) < 0;
  if (data.w == -1 && !vanish) throw std::logic_error("central_vanishing: odd functional equation with nonzero center");
  return vanish;
}

}  // namespace lcong
