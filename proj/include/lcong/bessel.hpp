// Modified Bessel functions K_0, K_1 in multiprecision and the kernel sums
//   S_j(B) = sum_n b_n n^{-(j+1)} I_j(2 sqrt(n/B)),  j = 0..J,
// where I_0 = z K_1(z) and I_j = z^{2j+1} K_1 + 2j z^{2j} K_0 + 4 j^2 I_{j-1}.
// These give the incomplete Mellin transforms of 2 K_0(2 sqrt(u)) at integer s.
#pragma once

#include <mpfr.h>

#include <vector>

#include "lcong/qseries.hpp"
#include "lcong/real.hpp"

namespace lcong {

// Switch point between ascending and asymptotic expansions for relative precision prec.
double bessel_crossover(mpfr_prec_t prec);

// K_0(z), K_1(z) to relative precision prec (z > 0).
void bessel_k01(mpfr_ptr k0, mpfr_ptr k1, mpfr_srcptr z, mpfr_prec_t prec);
void bessel_k01_series(mpfr_ptr k0, mpfr_ptr k1, mpfr_srcptr z, mpfr_prec_t prec);
void bessel_k01_asymptotic(mpfr_ptr k0, mpfr_ptr k1, mpfr_srcptr z, mpfr_prec_t prec);
void bessel_k01_ld(long double z, long double& k0, long double& k1);

// I_0..I_J from K_0, K_1.
void kernel_moments(long double z, long double k0, long double k1, int J, long double* out);

struct SweepOptions {
  int digits = 40;         // target: error <= 10^-digits * sum |terms| per j
  double growth = 2.0;     // |b_n| <~ C n^growth, used for the tail bound
};

struct SweepResult {
  std::vector<Real> S;     // S_0..S_J
  std::vector<Real> err;   // absolute error bounds
  std::vector<double> l1;  // sum |terms|
  long n_stop = 0;         // last index used
  long n_terms = 0;        // nonzero coefficients used
  long n_mpfr = 0;         // terms evaluated in multiprecision
  bool tail_ok = true;     // tail bound met within the available coefficients
};

// Smallest n_max whose kernel tail is negligible at the given digits.
long sweep_demand(double B, int weight, int digits);

SweepResult bessel_sweep(const IntSeq& b, long n_avail, const Real& B, int J, const SweepOptions& opt);

}  // namespace lcong
