// Property checks against independent oracles, shared by the unit tests and
// the acceptance runner. Each returns ok plus a short description of the first failure.
#pragma once

#include <complex>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lcong/artin.hpp"
#include "lcong/iwasawa.hpp"
#include "lcong/lfunc.hpp"
#include "lcong/padic.hpp"
#include "lcong/qseries.hpp"

namespace lcong::props {

struct Check {
  bool ok = true;
  long cases = 0;
  std::string detail;
  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

using cplx = std::complex<long double>;

// Roots of X^2 - a X + q^{k-1}.
inline std::pair<cplx, cplx> hecke_roots(const Form& f, long q) {
  long double a = f.a(q).get_d(), c = std::pow(static_cast<long double>(q), f.weight - 1);
  cplx disc = std::sqrt(cplx(a * a - 4 * c, 0));
  return {(cplx(a, 0) + disc) / 2.0L, (cplx(a, 0) - disc) / 2.0L};
}

// Coefficients of ∏ (1 - λ X) over the given roots.
inline std::vector<cplx> product_poly(const std::vector<cplx>& roots) {
  std::vector<cplx> c{1};
  for (const auto& r : roots) {
    std::vector<cplx> nc(c.size() + 1, 0);
    for (size_t i = 0; i < c.size(); ++i) {
      nc[i] += c[i];
      nc[i + 1] -= c[i] * r;
    }
    c = nc;
  }
  return c;
}

// Exact polynomial against floating coefficients, relative to the largest coefficient.
inline bool close_to(const Poly& exact, const std::vector<cplx>& approx) {
  long double scale = 1;
  for (const auto& x : approx) scale = std::max(scale, std::abs(x));
  const size_t n = std::max(exact.size(), approx.size());
  for (size_t i = 0; i < n; ++i) {
    long double e = i < exact.size() ? static_cast<long double>(exact[i].get_d()) : 0;
    cplx a = i < approx.size() ? approx[i] : cplx(0);
    if (std::abs(a - cplx(e)) > 1e-13L * scale + 0.25L) return false;
  }
  return true;
}

inline mpz_class mpz_pow(long b, unsigned e) { return zpow(b, e); }

// a_{mn} = a_m a_n for coprime pairs and the prime-power recursion.
inline Check hecke_multiplicativity(const Form& f, int pairs, unsigned seed) {
  Check c;
  std::mt19937_64 rng(seed);
  const long N = f.n_max();
  std::uniform_int_distribution<long> pick(2, static_cast<long>(std::sqrt(static_cast<double>(N))));
  while (c.cases < pairs) {
    long m = pick(rng), n = pick(rng);
    if (std::gcd(m, n) != 1 || m * n > N) continue;
    ++c.cases;
    if (f.a(m * n) != f.a(m) * f.a(n))
      c.fail("a(" + std::to_string(m * n) + ") != a(" + std::to_string(m) + ") a(" + std::to_string(n) + ")");
  }
  Sieve sv(std::min<long>(N, 1000));
  for (auto q : sv.primes) {
    const mpz_class qk = f.level % q == 0 ? mpz_class(0) : mpz_pow(q, static_cast<unsigned>(f.weight - 1));
    for (long e = 1, pe = q; pe * q <= N; ++e, pe *= q) {
      mpz_class prev = e == 1 ? mpz_class(1) : f.a(pe / q);
      ++c.cases;
      if (f.a(pe * q) != f.a(q) * f.a(pe) - qk * prev) c.fail("Hecke recursion at " + std::to_string(pe * q));
    }
  }
  return c;
}

// b_n(σ) = Σ_{d | n} a_d a_{n/d} χ₋₃(n/d).
inline Check sigma_product_vs_sieve(const Form& f, long n_max) {
  Check c;
  IntSeq b = twisted_dirichlet_coeffs(f, ArtinRep::sigma(3), n_max);
  ArtinRep chi = ArtinRep::chi_minus3();
  for (long n = 1; n <= n_max; ++n) {
    mpz_class s = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) s += f.a(d) * f.a(n / d) * chi.chi(n / d);
    ++c.cases;
    if (s != b.get(n)) c.fail("b_" + std::to_string(n) + "(sigma)");
  }
  return c;
}

// Local factors of ρ_{3,m} by factoring X^3 - m over F_q: ζ_J = ζ · L(ρ).
inline Poly zeta_j_factor(long m, long q) {
  int roots = 0;
  for (long x = 0; x < q; ++x)
    if ((x * x % q) * x % q == ((m % q) + q) % q) ++roots;
  if (roots == 3) return {1, -3, 3, -1};
  if (roots == 1) return poly_mul({1, -1}, {1, 0, -1});
  return {1, 0, 0, -1};
}

// Brute-force Euler factors for q < q_max: σ as a product over characters, ρ from
// Frobenius eigenvalues, and the ζ_J factorization of the Artin factor.
inline Check euler_factor_oracles(const Form& f, long q_max, const std::vector<long>& ms) {
  Check c;
  Sieve sv(q_max);
  ArtinRep chi = ArtinRep::chi_minus3();
  for (auto q : sv.primes) {
    if (q == 3) continue;
    auto [al, be] = hecke_roots(f, q);
    std::vector<cplx> fr = f.level % q != 0 ? std::vector<cplx>{al, be}
                           : f.ord_level(q) == 1 ? std::vector<cplx>{cplx(f.a(q).get_d(), 0)}
                                                 : std::vector<cplx>{};
    std::vector<cplx> sig;
    for (const auto& x : fr) {
      sig.push_back(x);
      sig.push_back(x * static_cast<long double>(chi.chi(q)));
    }
    ++c.cases;
    if (!close_to(twisted_euler_factor(f, ArtinRep::sigma(3), q), product_poly(sig)))
      c.fail("sigma factor at q=" + std::to_string(q));
    for (long m : ms) {
      if (m % q == 0) continue;
      ArtinRep rho = ArtinRep::rho(3, m);
      Poly art = artin_local_factor(rho, q);
      ++c.cases;
      if (!poly_equal(poly_mul({1, -1}, art), zeta_j_factor(m, q)))
        c.fail("zeta_J factorization at m=" + std::to_string(m) + " q=" + std::to_string(q));
      if (static_cast<long>(art.size()) <= 2 || art[2] != legendre(q, 3))
        c.fail("T^2 coefficient of the Artin factor at m=" + std::to_string(m) + " q=" + std::to_string(q));
      FrobClass fc = frobenius_class(rho, q);
      const cplx w(-0.5L, std::sqrt(3.0L) / 2);
      std::vector<cplx> ev = fc.kind == FrobKind::Identity ? std::vector<cplx>{1, 1}
                             : fc.kind == FrobKind::PCycle ? std::vector<cplx>{w, std::conj(w)}
                                                           : std::vector<cplx>{1, -1};
      std::vector<cplx> all;
      for (const auto& x : fr)
        for (const auto& e : ev) all.push_back(x * e);
      ++c.cases;
      if (!close_to(twisted_euler_factor(f, rho, q), product_poly(all)))
        c.fail("rho factor at m=" + std::to_string(m) + " q=" + std::to_string(q));
    }
  }
  return c;
}

inline bool divisible_by(const mpq_class& x, long p) {
  return x == 0 || (valuation(x.get_num(), p) - valuation(x.get_den(), p)) >= 1;
}

// P_v(f/𝒦, q^{-r n}) ≡ 2 - b_v mod p with b_v = α^r + β^r, and n-independence of 𝒫₁/𝒫₂.
inline Check eq44_and_membership(const Form& f, long p, long q_max) {
  Check c;
  Sieve sv(q_max);
  for (auto q : sv.primes) {
    if (q == p) continue;
    const int r = static_cast<int>(mult_order(static_cast<u64>(q % p), static_cast<u64>(p)));
    if (f.level % q != 0) {
      auto [al, be] = hecke_roots(f, q);
      long double bv = (std::pow(al, r) + std::pow(be, r)).real();
      mpz_class b = frobenius_trace_bv(f, q, r);
      ++c.cases;
      if (std::fabs(b.get_d() - static_cast<double>(bv)) > 1e-6 * (1 + std::fabs(static_cast<double>(bv))))
        c.fail("b_v at q=" + std::to_string(q));
      for (int n = 1; n < f.weight; ++n) {
        mpq_class X(1, zpow(q, static_cast<unsigned>(r * n)));
        mpq_class Pv = 1 - mpq_class(b) * X + mpq_class(zpow(q, static_cast<unsigned>(r * (f.weight - 1)))) * X * X;
        ++c.cases;
        if (!divisible_by(Pv - (2 - mpq_class(b)), p)) c.fail("P_v(q^{-rn}) != 2 - b_v mod p at q=" + std::to_string(q));
      }
    }
    if (f.level % q != 0 || f.ord_level(q) == 1) {
      ++c.cases;
      if (!euler_divisibility_crosscheck(f, p, q, 1, f.weight - 1))
        c.fail("membership vs Euler factor at q=" + std::to_string(q));
    }
  }
  return c;
}

// place_count(p, q) = φ(p^6) / ord_{p^6}(q), valid while ord_p(q^r - 1) < 6.
inline Check place_count_oracle(long p, long q_max) {
  Check c;
  Sieve sv(q_max);
  for (auto q : sv.primes) {
    if (q == p) continue;
    const long pr = p * p * p * p * p * p;
    u64 ord = mult_order(static_cast<u64>(q % pr), static_cast<u64>(pr));
    mpz_class want = mpz_class(pr / p * (p - 1)) / static_cast<unsigned long>(ord);
    ++c.cases;
    if (place_count(p, q) != want) c.fail("place count at q=" + std::to_string(q));
  }
  return c;
}

inline Check lambda_trivial_cases() {
  Check c;
  auto one = [&](bool ok, const char* what) {
    ++c.cases;
    if (!ok) c.fail(what);
  };
  one(lambda_transition(0, {}, 3) == 0, "lambda 0 with no places");
  one(lambda_transition(5, {}, 3) == 15, "lambda L with no places");
  PlaceClass p1;
  p1.q = 5;
  p1.place_count = 1;
  p1.membership = Membership::P1;
  one(lambda_transition(0, {p1}, 3) == 2, "one P1 place");
  PlaceClass p2 = p1;
  p2.membership = Membership::P2;
  p2.place_count = 3;
  one(lambda_transition(1, {p1, p2}, 3) == 3 + 2 + 12, "P1 and P2 places");
  PlaceClass none = p1;
  none.membership = Membership::None;
  one(lambda_transition(2, {none}, 3) == 6, "non-qualifying place");
  return c;
}

}  // namespace lcong::props
