#include "lcong/iwasawa.hpp"

#include <stdexcept>

#include "lcong/artin.hpp"
#include "lcong/lfunc.hpp"

namespace lcong {

std::string to_string(Membership m) {
  switch (m) {
    case Membership::P1: return "P1";
    case Membership::P2: return "P2";
    default: return "none";
  }
}

mpz_class place_count(long p, long q) {
  if (q % p == 0) throw std::invalid_argument("place_count: q must differ from p");
  const long r = static_cast<long>(mult_order(static_cast<u64>(q % p), static_cast<u64>(p)));
  mpz_class t = zpow(q, static_cast<unsigned>(r)) - 1;
  int c = valuation(t, p);
  return mpz_class((p - 1) / r) * zpow(p, static_cast<unsigned>(c - 1));
}

PlaceClass classify_place(const Form& f, long p, long q, long m) {
  if (q == p) throw std::invalid_argument("classify_place: q = p");
  if (m % q != 0) throw std::invalid_argument("classify_place: q must divide m");
  PlaceClass pc;
  pc.q = q;
  pc.r_q = static_cast<int>(mult_order(static_cast<u64>(q % p), static_cast<u64>(p)));
  pc.place_count = place_count(p, q);
  const int ord = f.level % q == 0 ? f.ord_level(q) : 0;
  if (ord == 0) {
    pc.b_v = frobenius_trace_bv(f, q, pc.r_q);
    mpz_class t = 2 - pc.b_v;
    if (t == 0 || mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) pc.membership = Membership::P2;
  } else if (ord == 1) {
    mpz_class a = f.a(q), ar;
    mpz_pow_ui(ar.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(pc.r_q));
    pc.b_v = ar;
    mpz_class t = ar - 1;
    if (t == 0 || mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) pc.membership = Membership::P1;
  }
  return pc;
}

mpz_class lambda_transition(const mpz_class& lambda_base, const std::vector<PlaceClass>& places, long p) {
  mpz_class lam = lambda_base * p;
  for (const auto& pc : places) {
    if (pc.membership == Membership::P2) lam += pc.place_count * (2 * (p - 1));
    if (pc.membership == Membership::P1) lam += pc.place_count * (p - 1);
  }
  return lam;
}

bool euler_divisibility_crosscheck(const Form& f, long p, long q, int n_lo, int n_hi) {
  PlaceClass pc = classify_place(f, p, q, q);
  const bool member = pc.membership != Membership::None;
  Poly P = twisted_euler_factor(f, ArtinRep::sigma(p), q);
  for (int n = n_lo; n <= n_hi; ++n) {
    mpq_class v = poly_eval(P, mpq_class(1, zpow(q, static_cast<unsigned>(n))));
    bool divisible = v == 0 || valuation(v.get_num(), p) > 0;
    if (divisible != member) return false;
  }
  return true;
}

}  // namespace lcong
