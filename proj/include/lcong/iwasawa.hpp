// Places of the cyclotomic Z_p-extension above q | m, the sets 𝒫₁ and 𝒫₂,
// and the λ-invariant transition formula.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "lcong/qseries.hpp"

namespace lcong {

enum class Membership { None, P1, P2 };
std::string to_string(Membership m);

struct PlaceClass {
  long q = 0;
  int r_q = 0;            // order of q mod p
  mpz_class place_count;  // places of Q(μ_{p^∞}) above q
  mpz_class b_v;          // trace of Frob_v on the form over Q(μ_p)
  Membership membership = Membership::None;
};

// ((p-1)/r) p^{c-1} with c = ord_p(q^r - 1).
mpz_class place_count(long p, long q);
PlaceClass classify_place(const Form& f, long p, long q, long m);
// p λ_base + Σ_{𝒫₂} 2(p-1) + Σ_{𝒫₁} (p-1), one term per place.
mpz_class lambda_transition(const mpz_class& lambda_base, const std::vector<PlaceClass>& places, long p);
// ord_p P_q(f,σ,q^{-n}) > 0 exactly when q is in 𝒫₁ ∪ 𝒫₂, for every n in [n_lo, n_hi].
bool euler_divisibility_crosscheck(const Form& f, long p, long q, int n_lo, int n_hi);

}  // namespace lcong
