#include "lcong/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace lcong {

double bessel_crossover(mpfr_prec_t prec) { return 0.3466 * static_cast<double>(prec) + 6.0; }

void bessel_k01_series(mpfr_ptr k0, mpfr_ptr k1, mpfr_srcptr z, mpfr_prec_t prec) {
  double zd = mpfr_get_d(z, MPFR_RNDN);
  mpfr_prec_t wp = prec + static_cast<mpfr_prec_t>(2.0 * zd * 1.4427 + 24 + std::log2(zd + 2.0) * 2);
  Real t(wp), term(wp), term1(wp), i0(wp), i1(wp), s2(wp), h(wp), lg(wp), tmp(wp), zz(wp);
  mpfr_set(zz.get(), z, MPFR_RNDN);
  mpfr_div_2ui(t.get(), zz.get(), 1, MPFR_RNDN);
  mpfr_sqr(t.get(), t.get(), MPFR_RNDN);  // (z/2)^2
  mpfr_set_ui(term.get(), 1, MPFR_RNDN);  // t^k/(k!)^2
  mpfr_set_ui(term1.get(), 1, MPFR_RNDN); // t^k/(k!(k+1)!)
  mpfr_set_ui(i0.get(), 1, MPFR_RNDN);
  mpfr_set_ui(i1.get(), 1, MPFR_RNDN);
  mpfr_set_zero(s2.get(), 1);
  mpfr_set_zero(h.get(), 1);
  for (unsigned long k = 1;; ++k) {
    mpfr_mul(term.get(), term.get(), t.get(), MPFR_RNDN);
    mpfr_div_ui(term.get(), term.get(), k * k, MPFR_RNDN);
    mpfr_mul(term1.get(), term1.get(), t.get(), MPFR_RNDN);
    mpfr_div_ui(term1.get(), term1.get(), k * (k + 1), MPFR_RNDN);
    mpfr_set_ui(tmp.get(), 1, MPFR_RNDN);
    mpfr_div_ui(tmp.get(), tmp.get(), k, MPFR_RNDN);
    mpfr_add(h.get(), h.get(), tmp.get(), MPFR_RNDN);
    mpfr_add(i0.get(), i0.get(), term.get(), MPFR_RNDN);
    mpfr_add(i1.get(), i1.get(), term1.get(), MPFR_RNDN);
    mpfr_mul(tmp.get(), term.get(), h.get(), MPFR_RNDN);
    mpfr_add(s2.get(), s2.get(), tmp.get(), MPFR_RNDN);
    if (static_cast<double>(k) > zd && mpfr_get_exp(term.get()) + static_cast<long>(wp) + 8 < mpfr_get_exp(i0.get()))
      break;
  }
  mpfr_div_2ui(tmp.get(), zz.get(), 1, MPFR_RNDN);
  mpfr_mul(i1.get(), i1.get(), tmp.get(), MPFR_RNDN);  // I_1 = (z/2) sum
  mpfr_log(lg.get(), tmp.get(), MPFR_RNDN);
  mpfr_const_euler(tmp.get(), MPFR_RNDN);
  mpfr_add(lg.get(), lg.get(), tmp.get(), MPFR_RNDN);
  mpfr_mul(lg.get(), lg.get(), i0.get(), MPFR_RNDN);
  Real K0(wp), K1(wp);
  mpfr_sub(K0.get(), s2.get(), lg.get(), MPFR_RNDN);
  // Wronskian I_0 K_1 + I_1 K_0 = 1/z
  mpfr_ui_div(tmp.get(), 1, zz.get(), MPFR_RNDN);
  mpfr_mul(K1.get(), i1.get(), K0.get(), MPFR_RNDN);
  mpfr_sub(K1.get(), tmp.get(), K1.get(), MPFR_RNDN);
  mpfr_div(K1.get(), K1.get(), i0.get(), MPFR_RNDN);
  mpfr_set(k0, K0.get(), MPFR_RNDN);
  mpfr_set(k1, K1.get(), MPFR_RNDN);
}

void bessel_k01_asymptotic(mpfr_ptr k0, mpfr_ptr k1, mpfr_srcptr z, mpfr_prec_t prec) {
  mpfr_prec_t wp = prec + 16;
  Real s0(wp), s1(wp), a0(wp), a1(wp), zi(wp), tmp(wp);
  mpfr_ui_div(zi.get(), 1, z, MPFR_RNDN);
  mpfr_set_ui(s0.get(), 1, MPFR_RNDN);
  mpfr_set_ui(s1.get(), 1, MPFR_RNDN);
  mpfr_set_ui(a0.get(), 1, MPFR_RNDN);
  mpfr_set_ui(a1.get(), 1, MPFR_RNDN);
  long prev_exp = 0;
  for (long k = 1;; ++k) {
    long odd = (2 * k - 1) * (2 * k - 1);
    mpfr_mul_si(a0.get(), a0.get(), -odd, MPFR_RNDN);
    mpfr_mul_si(a1.get(), a1.get(), 4 - odd, MPFR_RNDN);
    mpfr_mul(a0.get(), a0.get(), zi.get(), MPFR_RNDN);
    mpfr_mul(a1.get(), a1.get(), zi.get(), MPFR_RNDN);
    mpfr_div_ui(a0.get(), a0.get(), static_cast<unsigned long>(8 * k), MPFR_RNDN);
    mpfr_div_ui(a1.get(), a1.get(), static_cast<unsigned long>(8 * k), MPFR_RNDN);
    mpfr_add(s0.get(), s0.get(), a0.get(), MPFR_RNDN);
    mpfr_add(s1.get(), s1.get(), a1.get(), MPFR_RNDN);
    long e = std::max(mpfr_zero_p(a0.get()) ? -(1L << 40) : mpfr_get_exp(a0.get()),
                      mpfr_zero_p(a1.get()) ? -(1L << 40) : mpfr_get_exp(a1.get()));
    if (e < -static_cast<long>(wp)) break;
    if (k > 4 && e > prev_exp) throw std::domain_error("bessel asymptotic expansion diverges at this argument");
    prev_exp = e;
  }
  // sqrt(pi/(2z)) e^{-z}
  mpfr_const_pi(tmp.get(), MPFR_RNDN);
  mpfr_mul(tmp.get(), tmp.get(), zi.get(), MPFR_RNDN);
  mpfr_div_2ui(tmp.get(), tmp.get(), 1, MPFR_RNDN);
  mpfr_sqrt(tmp.get(), tmp.get(), MPFR_RNDN);
  Real ez(wp);
  mpfr_neg(ez.get(), z, MPFR_RNDN);
  mpfr_exp(ez.get(), ez.get(), MPFR_RNDN);
  mpfr_mul(tmp.get(), tmp.get(), ez.get(), MPFR_RNDN);
  mpfr_mul(k0, s0.get(), tmp.get(), MPFR_RNDN);
  mpfr_mul(k1, s1.get(), tmp.get(), MPFR_RNDN);
}

void bessel_k01(mpfr_ptr k0, mpfr_ptr k1, mpfr_srcptr z, mpfr_prec_t prec) {
  if (mpfr_sgn(z) <= 0) throw std::domain_error("bessel_k01: z must be positive");
  if (mpfr_get_d(z, MPFR_RNDN) >= bessel_crossover(prec)) bessel_k01_asymptotic(k0, k1, z, prec);
  else bessel_k01_series(k0, k1, z, prec);
}

void bessel_k01_ld(long double z, long double& k0, long double& k1) {
  Real zz(96), a(96), b(96);
  mpfr_set_ld(zz.get(), z, MPFR_RNDN);
  bessel_k01(a.get(), b.get(), zz.get(), 80);
  k0 = a.to_ld();
  k1 = b.to_ld();
}

void kernel_moments(long double z, long double k0, long double k1, int J, long double* out) {
  long double z2 = z * z, zp = z, ze = 1;
  out[0] = z * k1;
  for (int j = 1; j <= J; ++j) {
    zp *= z2;
    ze *= z2;
    out[j] = zp * k1 + 2.0L * j * ze * k0 + 4.0L * j * j * out[j - 1];
  }
}

long sweep_demand(double B, int weight, int digits) {
  const double g = (weight - 1) / 2.0 + 1.0;
  double target = digits * std::log(10.0) + 12.0 + (g + 1) * std::log(std::max(B, 1.0));
  double z = target + 10;
  for (int it = 0; it < 50; ++it) z = target + (2 * g + 1) * std::log(z);
  double n = z * z * B / 4.0;
  return std::max<long>(16, static_cast<long>(std::ceil(n)) + 1);
}

namespace {

constexpr long double kAnchorStep = 1.0L / 16;

struct Anchor {
  double z0;
  std::vector<Real> c;   // Taylor coefficients of K_0 at z0
  std::vector<Real> d;   // d_i = (i+1) c_{i+1}; K_1(z0+h) = -sum d_i h^i
  std::vector<long double> cl, dl;
  std::vector<double> lg;  // log2 |c_i|
};

std::unique_ptr<Anchor> make_anchor(double z0, mpfr_prec_t P) {
  auto a = std::make_unique<Anchor>();
  a->z0 = z0;
  mpfr_prec_t wp = P + 32;
  Real z(z0, wp), k0(wp), k1(wp);
  bessel_k01(k0.get(), k1.get(), z.get(), wp);
  std::vector<Real> c;
  c.push_back(k0);
  c.push_back(-k1);
  Real t(wp), u(wp);
  double lg0 = std::log2(std::fabs(k0.to_double())) + static_cast<double>(0);
  // exponent-based log2 to survive underflow of doubles
  auto lg2 = [](const Real& x) {
    if (x.is_zero()) return -1e300;
    long e;
    double m = mpfr_get_d_2exp(&e, x.get(), MPFR_RNDN);
    return std::log2(std::fabs(m)) + static_cast<double>(e);
  };
  lg0 = lg2(k0);
  int small_run = 0;
  for (long k = 0; k < 600; ++k) {
    // c_{k+2} = (z0 c_k + c_{k-1} - (k+1)^2 c_{k+1}) / (z0 (k+1)(k+2))
    mpfr_mul(t.get(), c[k].get(), z.get(), MPFR_RNDN);
    if (k >= 1) mpfr_add(t.get(), t.get(), c[k - 1].get(), MPFR_RNDN);
    mpfr_mul_ui(u.get(), c[k + 1].get(), static_cast<unsigned long>((k + 1) * (k + 1)), MPFR_RNDN);
    mpfr_sub(t.get(), t.get(), u.get(), MPFR_RNDN);
    mpfr_div(t.get(), t.get(), z.get(), MPFR_RNDN);
    mpfr_div_ui(t.get(), t.get(), static_cast<unsigned long>((k + 1) * (k + 2)), MPFR_RNDN);
    c.push_back(t);
    double l = lg2(t) - 5.0 * static_cast<double>(k + 2);
    small_run = (l < lg0 - static_cast<double>(P) - 12) ? small_run + 1 : 0;
    if (small_run >= 3) break;
  }
  for (size_t i = 0; i < c.size(); ++i) {
    Real ci(P);
    mpfr_set(ci.get(), c[i].get(), MPFR_RNDN);
    a->c.push_back(ci);
    a->cl.push_back(ci.to_ld());
    a->lg.push_back(lg2(ci));
  }
  for (size_t i = 0; i + 1 < c.size(); ++i) {
    Real di(P);
    mpfr_mul_ui(di.get(), c[i + 1].get(), static_cast<unsigned long>(i + 1), MPFR_RNDN);
    a->d.push_back(di);
    a->dl.push_back(di.to_ld());
  }
  return a;
}

// Number of Taylor terms for relative accuracy 2^-bits at offset h.
int taylor_degree(const Anchor& a, double log2h, double bits) {
  const double target = a.lg[0] - bits - 4;
  int n = static_cast<int>(a.d.size()) - 1;
  for (int i = 1; i + 1 < n; ++i) {
    if (a.lg[i] + i * log2h < target && a.lg[i + 1] + (i + 1) * log2h < target) return std::min(i, n);
  }
  return n;
}

class AnchorTable {
 public:
  explicit AnchorTable(mpfr_prec_t P) : P_(P) {}
  const Anchor& at(long double z, long double& h) {
    long idx = std::lround(static_cast<double>((z - 1.0L) / kAnchorStep));
    if (idx < 0) idx = 0;
    if (static_cast<size_t>(idx) >= table_.size()) table_.resize(static_cast<size_t>(idx) + 1);
    auto& slot = table_[static_cast<size_t>(idx)];
    double z0 = 1.0 + static_cast<double>(idx) / 16.0;
    if (!slot) slot = make_anchor(z0, P_);
    h = z - static_cast<long double>(z0);
    return *slot;
  }
  const Anchor& by_index(long idx) {
    if (static_cast<size_t>(idx) >= table_.size()) table_.resize(static_cast<size_t>(idx) + 1);
    auto& slot = table_[static_cast<size_t>(idx)];
    if (!slot) slot = make_anchor(1.0 + static_cast<double>(idx) / 16.0, P_);
    return *slot;
  }

 private:
  mpfr_prec_t P_;
  std::vector<std::unique_ptr<Anchor>> table_;
};

void eval_ld(AnchorTable& tab, long double z, long double& k0, long double& k1) {
  if (z < 1.0L - 1.0L / 32) {
    bessel_k01_ld(z, k0, k1);
    return;
  }
  long double h;
  const Anchor& a = tab.at(z, h);
  double lh = h == 0 ? -1000.0 : std::log2(std::fabs(static_cast<double>(h)));
  int deg = taylor_degree(a, lh, 66);
  long double s0 = a.cl[deg], s1 = a.dl[deg];
  for (int i = deg - 1; i >= 0; --i) {
    s0 = s0 * h + a.cl[i];
    s1 = s1 * h + a.dl[i];
  }
  k0 = s0;
  k1 = -s1;
}

struct Temps {
  explicit Temps(mpfr_prec_t b, int J)
      : z(b), h(b), k0(b), k1(b), z2(b), zp(b), ze(b), t(b), u(b), I(static_cast<size_t>(J) + 1, Real(b)),
        term(static_cast<size_t>(J) + 1, Real(b)) {}
  Real z, h, k0, k1, z2, zp, ze, t, u;
  std::vector<Real> I, term;
};

}  // namespace

SweepResult bessel_sweep(const IntSeq& b, long n_avail, const Real& B, int J, const SweepOptions& opt) {
  const mpfr_prec_t P = digits_to_bits(opt.digits) + 24;
  const long N = std::min(n_avail, b.n_max());
  const long double Bld = B.to_ld();
  AnchorTable tab(P);
  auto coef = [&b](long n) -> long double {
    return b.wide() ? static_cast<long double>(b.get(n).get_d()) : static_cast<long double>(b.small(n));
  };
  std::vector<long double> mom(static_cast<size_t>(J) + 1), term(static_cast<size_t>(J) + 1);
  auto terms_ld = [&](long n, long double bn) {
    long double z = 2.0L * std::sqrt(static_cast<long double>(n) / Bld);
    long double k0, k1;
    eval_ld(tab, z, k0, k1);
    kernel_moments(z, k0, k1, J, mom.data());
    long double inv = 1.0L / static_cast<long double>(n), pw = inv;
    for (int j = 0; j <= J; ++j) {
      term[j] = bn * mom[j] * pw;
      pw *= inv;
    }
  };

  SweepResult res;
  res.l1.assign(static_cast<size_t>(J) + 1, 0.0);
  long double cb = 0;
  long nterms = 0;
  for (long n = 1; n <= N; ++n) {
    long double bn = coef(n);
    if (bn == 0) continue;
    ++nterms;
    terms_ld(n, bn);
    for (int j = 0; j <= J; ++j) res.l1[j] += static_cast<double>(std::fabs(term[j]));
    cb = std::max(cb, std::fabs(bn) / std::pow(static_cast<long double>(n), static_cast<long double>(opt.growth)));
  }
  std::vector<long double> eta(static_cast<size_t>(J) + 1);
  for (int j = 0; j <= J; ++j)
    eta[j] = std::max<long double>(static_cast<long double>(res.l1[j]) * std::pow(10.0L, -opt.digits), 1e-4000L);

  auto tail = [&](long double X, int j) {
    long double z = 2.0L * std::sqrt(X / Bld);
    long double k0, k1;
    bessel_k01_ld(z, k0, k1);
    kernel_moments(z, k0, k1, J, mom.data());
    return 4.0L * cb * std::pow(X, static_cast<long double>(opt.growth) - (j + 1)) * mom[j] * std::sqrt(X * Bld);
  };
  auto tail_ok_at = [&](long double X) {
    for (int j = 0; j <= J; ++j)
      if (tail(X, j) > eta[j] / 8) return false;
    return true;
  };
  long n_stop = N;
  if (!tail_ok_at(static_cast<long double>(N))) {
    res.tail_ok = false;
  } else {
    long lo = std::max<long>(1, static_cast<long>(Bld)), hi = N;
    if (lo > hi) lo = hi;
    if (tail_ok_at(static_cast<long double>(lo))) hi = lo;
    while (hi - lo > 1) {
      long mid = lo + (hi - lo) / 2;
      if (tail_ok_at(static_cast<long double>(mid))) hi = mid;
      else lo = mid;
    }
    n_stop = hi;
  }
  res.n_stop = n_stop;
  res.n_terms = nterms;

  res.S.assign(static_cast<size_t>(J) + 1, Real(P));
  res.err.assign(static_cast<size_t>(J) + 1, Real(64));
  std::vector<long double> err(static_cast<size_t>(J) + 1, 0), block(static_cast<size_t>(J) + 1, 0);
  for (int j = 0; j <= J; ++j) err[j] = tail(static_cast<long double>(n_stop), j);
  int in_block = 0;
  Real conv(P);
  auto flush = [&]() {
    for (int j = 0; j <= J; ++j) {
      mpfr_set_ld(conv.get(), block[j], MPFR_RNDN);
      mpfr_add(res.S[j].get(), res.S[j].get(), conv.get(), MPFR_RNDN);
      block[j] = 0;
    }
    in_block = 0;
  };
  std::vector<std::unique_ptr<Temps>> temps(static_cast<size_t>(P / 32 + 2));
  Real Bp(P);
  mpfr_set(Bp.get(), B.get(), MPFR_RNDN);
  const long double lnt = std::log2(static_cast<long double>(std::max<long>(nterms, 1)));

  for (long n = 1; n <= n_stop; ++n) {
    long double bn = coef(n);
    if (bn == 0) continue;
    terms_ld(n, bn);
    long double need = -1e9L;
    for (int j = 0; j <= J; ++j) {
      if (term[j] == 0) continue;
      need = std::max(need, std::log2(std::fabs(term[j]) / eta[j]) + lnt + 8);
    }
    if (need <= 52) {
      for (int j = 0; j <= J; ++j) {
        block[j] += term[j];
        err[j] += std::fabs(term[j]) * 0x1p-58L;
      }
      if (++in_block == 64) flush();
      continue;
    }
    mpfr_prec_t bits = std::min<mpfr_prec_t>(P, (static_cast<mpfr_prec_t>(need) + 8 + 31) / 32 * 32);
    auto& tp = temps[static_cast<size_t>(bits / 32)];
    if (!tp) tp = std::make_unique<Temps>(bits, J);
    Temps& T = *tp;
    ++res.n_mpfr;
    mpfr_set_ui(T.z.get(), static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_div(T.z.get(), T.z.get(), Bp.get(), MPFR_RNDN);
    mpfr_sqrt(T.z.get(), T.z.get(), MPFR_RNDN);
    mpfr_mul_2ui(T.z.get(), T.z.get(), 1, MPFR_RNDN);
    long double zl = 2.0L * std::sqrt(static_cast<long double>(n) / Bld);
    if (zl < 1.0L - 1.0L / 32) {
      bessel_k01(T.k0.get(), T.k1.get(), T.z.get(), bits);
    } else {
      long idx = std::lround(static_cast<double>((zl - 1.0L) / kAnchorStep));
      if (idx < 0) idx = 0;
      const Anchor& a = tab.by_index(idx);
      mpfr_sub_d(T.h.get(), T.z.get(), a.z0, MPFR_RNDN);
      double hd = mpfr_get_d(T.h.get(), MPFR_RNDN);
      double lh = hd == 0 ? -1000.0 : std::log2(std::fabs(hd));
      int deg = taylor_degree(a, lh, static_cast<double>(bits) + 4);
      mpfr_set(T.k0.get(), a.c[deg].get(), MPFR_RNDN);
      mpfr_set(T.k1.get(), a.d[deg].get(), MPFR_RNDN);
      for (int i = deg - 1; i >= 0; --i) {
        mpfr_mul(T.k0.get(), T.k0.get(), T.h.get(), MPFR_RNDN);
        mpfr_add(T.k0.get(), T.k0.get(), a.c[i].get(), MPFR_RNDN);
        mpfr_mul(T.k1.get(), T.k1.get(), T.h.get(), MPFR_RNDN);
        mpfr_add(T.k1.get(), T.k1.get(), a.d[i].get(), MPFR_RNDN);
      }
      mpfr_neg(T.k1.get(), T.k1.get(), MPFR_RNDN);
    }
    // moments
    mpfr_mul(T.I[0].get(), T.z.get(), T.k1.get(), MPFR_RNDN);
    mpfr_sqr(T.z2.get(), T.z.get(), MPFR_RNDN);
    mpfr_set(T.zp.get(), T.z.get(), MPFR_RNDN);
    mpfr_set_ui(T.ze.get(), 1, MPFR_RNDN);
    for (int j = 1; j <= J; ++j) {
      mpfr_mul(T.zp.get(), T.zp.get(), T.z2.get(), MPFR_RNDN);
      mpfr_mul(T.ze.get(), T.ze.get(), T.z2.get(), MPFR_RNDN);
      mpfr_mul(T.t.get(), T.zp.get(), T.k1.get(), MPFR_RNDN);
      mpfr_mul(T.u.get(), T.ze.get(), T.k0.get(), MPFR_RNDN);
      mpfr_mul_ui(T.u.get(), T.u.get(), static_cast<unsigned long>(2 * j), MPFR_RNDN);
      mpfr_add(T.t.get(), T.t.get(), T.u.get(), MPFR_RNDN);
      mpfr_mul_ui(T.u.get(), T.I[j - 1].get(), static_cast<unsigned long>(4 * j * j), MPFR_RNDN);
      mpfr_add(T.I[j].get(), T.t.get(), T.u.get(), MPFR_RNDN);
    }
    for (int j = 0; j <= J; ++j) {
      if (b.wide()) mpfr_mul_z(T.t.get(), T.I[j].get(), b.get(n).get_mpz_t(), MPFR_RNDN);
      else mpfr_mul_si(T.t.get(), T.I[j].get(), static_cast<long>(b.small(n)), MPFR_RNDN);
      for (int r = 0; r <= j; ++r) mpfr_div_ui(T.t.get(), T.t.get(), static_cast<unsigned long>(n), MPFR_RNDN);
      mpfr_add(res.S[j].get(), res.S[j].get(), T.t.get(), MPFR_RNDN);
      err[j] += std::fabs(term[j]) * std::pow(2.0L, -static_cast<long double>(bits) + 8);
    }
  }
  flush();
  for (int j = 0; j <= J; ++j) {
    err[j] += static_cast<long double>(res.l1[j]) * std::pow(2.0L, -static_cast<long double>(P) + 24);
    mpfr_set_ld(res.err[j].get(), err[j], MPFR_RNDU);
  }
  return res;
}

}  // namespace lcong
