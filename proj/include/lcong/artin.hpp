// Artin representations sigma_p, rho_{p,m} and Dirichlet characters:
// Frobenius classes, local factors, conductors, epsilon factors, root numbers.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lcong/arith.hpp"
#include "lcong/poly.hpp"
#include "lcong/qseries.hpp"

namespace lcong {

enum class RepKind { Sigma, Rho, Dirichlet };

struct ArtinRep {
  RepKind kind = RepKind::Dirichlet;
  long p = 3;
  long m = 0;                // Rho only
  long modulus = 1;          // Dirichlet only
  long char_conductor = 1;   // Dirichlet only
  std::vector<int> values;   // Dirichlet only: chi(0..modulus-1)

  static ArtinRep sigma(long p);
  static ArtinRep rho(long p, long m);
  static ArtinRep dirichlet(long modulus, std::vector<int> values, long conductor);
  static ArtinRep trivial();
  // Quadratic character of Q(sqrt(-3)).
  static ArtinRep chi_minus3();

  int dim() const;
  int chi(long n) const;  // Dirichlet only
  std::string name() const;
};

ArtinRep dual(const ArtinRep& rep);

enum class FrobKind { Identity, PCycle, Reflection };
struct FrobClass {
  long q;
  FrobKind kind;
  int order;  // order of Frobenius: 1, p, or r = ord of q mod p
};

bool is_pth_power_mod(long m, long p, long q);
FrobClass frobenius_class(const ArtinRep& rho, long q);
Poly artin_local_factor(const ArtinRep& rep, long q);
// 𝒩(φ)
long conductor(const ArtinRep& rep);
// Exponent of p in 𝒩(φ); e_p(φ) of the p-adic interpolation formula.
int conductor_exponent_p(const ArtinRep& rep);

// p^{num/den}
struct HalfPower {
  long base;
  long num;
  long den;
  bool operator==(const HalfPower&) const = default;
};
// Value consistent with the tables: p^{ord_p 𝒩(φ)/2}.
HalfPower epsilon_p(const ArtinRep& rep);
// Alternative normalization: sqrt(3) for sigma, 3, 3^3, 3^5 for rho.
HalfPower epsilon_stated(const ArtinRep& rep);

std::pair<int, int> d_plus_minus(const ArtinRep& rep, int n);

struct LocalRootNumber {
  int sign;          // the bracketed factor
  bool h2_violation; // q^2 | N and q | pm
};
LocalRootNumber local_root_number(const Form& f, const ArtinRep& rho, long q);
// Closed formula for sigma_p and rho_{p,m}; requires p ∤ N for sigma.
int global_root_number(const Form& f, const ArtinRep& rep);
// Product of local factors times the archimedean sign.
int global_root_number_from_local(const Form& f, const ArtinRep& rho);

bool violates_h2(const Form& f, const ArtinRep& rep);

}  // namespace lcong
