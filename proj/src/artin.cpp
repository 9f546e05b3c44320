#include "lcong/artin.hpp"

#include <stdexcept>

namespace lcong {

ArtinRep ArtinRep::sigma(long p) {
  if (p < 3 || !is_prime(static_cast<u64>(p))) throw std::invalid_argument("sigma: p must be an odd prime");
  ArtinRep r;
  r.kind = RepKind::Sigma;
  r.p = p;
  return r;
}

ArtinRep ArtinRep::rho(long p, long m) {
  if (p < 3 || !is_prime(static_cast<u64>(p))) throw std::invalid_argument("rho: p must be an odd prime");
  if (m < 2) throw std::invalid_argument("rho: m must be > 1");
  for (auto& [q, e] : factor(m))
    if (e >= p) throw std::invalid_argument("rho: m must be p-th power free");
  ArtinRep r;
  r.kind = RepKind::Rho;
  r.p = p;
  r.m = m;
  return r;
}

ArtinRep ArtinRep::dirichlet(long modulus, std::vector<int> values, long cond) {
  if (static_cast<long>(values.size()) != modulus) throw std::invalid_argument("dirichlet: need one value per residue");
  ArtinRep r;
  r.kind = RepKind::Dirichlet;
  r.modulus = modulus;
  r.values = std::move(values);
  r.char_conductor = cond;
  return r;
}

ArtinRep ArtinRep::trivial() { return dirichlet(1, {1}, 1); }

ArtinRep ArtinRep::chi_minus3() { return dirichlet(3, {0, 1, -1}, 3); }

int ArtinRep::dim() const { return kind == RepKind::Dirichlet ? 1 : static_cast<int>(p - 1); }

int ArtinRep::chi(long n) const {
  long r = n % modulus;
  if (r < 0) r += modulus;
  return values[static_cast<size_t>(r)];
}

std::string ArtinRep::name() const {
  switch (kind) {
    case RepKind::Sigma: return "sigma_" + std::to_string(p);
    case RepKind::Rho: return "rho_" + std::to_string(p) + "," + std::to_string(m);
    default: return "chi_mod" + std::to_string(modulus);
  }
}

ArtinRep dual(const ArtinRep& rep) {
  if (rep.kind != RepKind::Dirichlet) return rep;
  ArtinRep d = rep;
  // real-valued characters only; the conjugate character has the same table
  return d;
}

bool is_pth_power_mod(long m, long p, long q) {
  long r = ((m % q) + q) % q;
  if (r == 0) return true;
  if ((q - 1) % p != 0) return true;
  return powmod(static_cast<u64>(r), static_cast<u64>((q - 1) / p), static_cast<u64>(q)) == 1;
}

FrobClass frobenius_class(const ArtinRep& rho, long q) {
  if (rho.kind != RepKind::Rho) throw std::invalid_argument("frobenius_class: rho representation required");
  if (q == rho.p || rho.m % q == 0) throw std::invalid_argument("frobenius_class: q is ramified");
  if (q % rho.p == 1) {
    if (is_pth_power_mod(rho.m, rho.p, q)) return {q, FrobKind::Identity, 1};
    return {q, FrobKind::PCycle, static_cast<int>(rho.p)};
  }
  return {q, FrobKind::Reflection, static_cast<int>(mult_order(static_cast<u64>(q % rho.p), static_cast<u64>(rho.p)))};
}

namespace {

// (1 - T^r)^e
Poly one_minus_power(unsigned r, unsigned e) { return poly_pow(poly_inflate(Poly{1, -1}, r), e); }

}  // namespace

Poly artin_local_factor(const ArtinRep& rep, long q) {
  const long p = rep.p;
  switch (rep.kind) {
    case RepKind::Sigma: {
      if (q == p) return Poly{1, -1};
      unsigned r = static_cast<unsigned>(mult_order(static_cast<u64>(q % p), static_cast<u64>(p)));
      return one_minus_power(r, static_cast<unsigned>((p - 1) / r));
    }
    case RepKind::Rho: {
      if (q == p) {
        mpz_class t = zpow(rep.m % (p * p), static_cast<unsigned>(p - 1));
        return (t % (p * p) == 1) ? Poly{1, -1} : Poly{1};
      }
      if (rep.m % q == 0) return Poly{1};
      FrobClass fc = frobenius_class(rep, q);
      if (fc.kind == FrobKind::Identity) return one_minus_power(1, static_cast<unsigned>(p - 1));
      if (fc.kind == FrobKind::PCycle) return Poly(static_cast<size_t>(p - 1) + 1, 1);
      return one_minus_power(static_cast<unsigned>(fc.order), static_cast<unsigned>((p - 1) / fc.order));
    }
    case RepKind::Dirichlet: {
      return Poly{1, -rep.chi(q)};
    }
  }
  return Poly{1};
}

int conductor_exponent_p(const ArtinRep& rep) {
  if (rep.kind == RepKind::Dirichlet) return rep.char_conductor % rep.p == 0 ? 1 : 0;
  if (rep.p != 3) throw std::invalid_argument("conductor: only p = 3 is implemented");
  if (rep.kind == RepKind::Sigma) return 1;
  if (rep.m % 3 == 0) return 5;
  long r = rep.m % 9;
  return (r == 1 || r == 8) ? 1 : 3;
}

long conductor(const ArtinRep& rep) {
  if (rep.kind == RepKind::Dirichlet) return rep.char_conductor;
  if (rep.p != 3) throw std::invalid_argument("conductor: only p = 3 is implemented");
  if (rep.kind == RepKind::Sigma) return 3;
  long M = 1;
  for (i64 q : prime_divisors(rep.m))
    if (q != 3) M *= q;
  return M * M * ipow(3, static_cast<unsigned>(conductor_exponent_p(rep)));
}

HalfPower epsilon_p(const ArtinRep& rep) {
  if (rep.p != 3 || rep.kind == RepKind::Dirichlet) throw std::invalid_argument("epsilon_p: only sigma_3 and rho_3,m");
  return {3, conductor_exponent_p(rep), 2};
}

HalfPower epsilon_stated(const ArtinRep& rep) {
  if (rep.p != 3 || rep.kind == RepKind::Dirichlet) throw std::invalid_argument("epsilon_p: only sigma_3 and rho_3,m");
  if (rep.kind == RepKind::Sigma) return {3, 1, 2};
  return {3, conductor_exponent_p(rep), 1};
}

std::pair<int, int> d_plus_minus(const ArtinRep& rep, int n) {
  int dp, dm;
  if (rep.kind == RepKind::Dirichlet) {
    bool even = rep.chi(-1) == 1;
    dp = even ? 1 : 0;
    dm = 1 - dp;
  } else {
    dp = dm = static_cast<int>((rep.p - 1) / 2);
  }
  return n % 2 == 0 ? std::pair{dp, dm} : std::pair{dm, dp};
}

bool violates_h2(const Form& f, const ArtinRep& rep) {
  if (rep.kind == RepKind::Dirichlet) return false;
  for (i64 q : prime_divisors(f.level)) {
    if (f.ord_level(q) < 2) continue;
    if (q == rep.p || (rep.kind == RepKind::Rho && rep.m % q == 0)) return true;
  }
  return false;
}

LocalRootNumber local_root_number(const Form& f, const ArtinRep& rho, long q) {
  if (rho.kind != RepKind::Rho) throw std::invalid_argument("local_root_number: rho representation required");
  const long p = rho.p;
  int ordN = f.ord_level(q);
  bool h2 = ordN >= 2 && (q == p || rho.m % q == 0);
  if (q != p && rho.m % q != 0) {
    int s = legendre(q, p);
    return {(ordN % 2 == 1) ? s : 1, h2};
  }
  if (q == p && ordN == 1) {
    mpz_class t = zpow(rho.m % (p * p), static_cast<unsigned>(p - 1));
    if (t % (p * p) == 1) return {f.a(p) > 0 ? -1 : 1, h2};
  }
  return {1, h2};
}

int global_root_number_from_local(const Form& f, const ArtinRep& rho) {
  int w = ((rho.p - 1) / 2) % 2 == 0 ? 1 : -1;
  std::vector<i64> qs = prime_divisors(f.level * rho.p * rho.m);
  for (i64 q : qs) w *= local_root_number(f, rho, q).sign;
  return w;
}

int global_root_number(const Form& f, const ArtinRep& rep) {
  const long p = rep.p;
  int arch = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
  if (rep.kind == RepKind::Sigma) {
    if (f.level % p == 0) throw std::invalid_argument("global_root_number: sigma formula needs p ∤ N");
    return arch * legendre(f.level, p);
  }
  if (rep.kind != RepKind::Rho) throw std::invalid_argument("global_root_number: solve numerically for characters");
  int delta = 1;
  if (f.ord_level(p) == 1) {
    mpz_class t = zpow(rep.m % (p * p), static_cast<unsigned>(p - 1));
    if (t % (p * p) == 1) delta = f.a(p) > 0 ? -1 : 1;
  }
  int prod = 1;
  for (i64 q : prime_divisors(f.level)) {
    if (q == p || rep.m % q == 0) continue;
    if (f.ord_level(q) % 2 == 1) prod *= legendre(q, p);
  }
  return arch * delta * prod;
}

}  // namespace lcong
