#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "doctest.h"
#include "lcong/bessel.hpp"

using namespace lcong;
using big = boost::multiprecision::cpp_bin_float_50;

namespace {

double rel(const Real& x, const big& ref) {
  big v(x.str(45));
  return static_cast<double>(abs((v - ref) / ref));
}

}  // namespace

TEST_CASE("K0 and K1 against an independent implementation") {
  for (double z : {0.001, 0.05, 0.5, 1.0, 2.5, 7.0, 15.0, 30.0, 45.0, 80.0, 150.0}) {
    CAPTURE(z);
    Real zz(z, 256), k0(256), k1(256);
    bessel_k01(k0.get(), k1.get(), zz.get(), 200);
    big bz(z);
    CHECK(rel(k0, boost::math::cyl_bessel_k(0, bz)) < 1e-40);
    CHECK(rel(k1, boost::math::cyl_bessel_k(1, bz)) < 1e-40);
    long double a, b;
    bessel_k01_ld(static_cast<long double>(z), a, b);
    CHECK(std::fabs(a / boost::math::cyl_bessel_k(0, static_cast<long double>(z)) - 1) < 1e-16L);
    CHECK(std::fabs(b / boost::math::cyl_bessel_k(1, static_cast<long double>(z)) - 1) < 1e-16L);
  }
}

TEST_CASE("series and asymptotic expansions agree past the crossover") {
  const mpfr_prec_t prec = 200;
  const double z = bessel_crossover(prec) + 2;
  Real zz(z, 256), s0(256), s1(256), a0(256), a1(256);
  bessel_k01_series(s0.get(), s1.get(), zz.get(), prec);
  bessel_k01_asymptotic(a0.get(), a1.get(), zz.get(), prec);
  Real d0 = abs((s0 - a0) / a0), d1 = abs((s1 - a1) / a1);
  CHECK(d0.to_double() < 1e-50);
  CHECK(d1.to_double() < 1e-50);
}

TEST_CASE("kernel moments are the incomplete integrals of t^{2j+1} K0(t)") {
  boost::math::quadrature::exp_sinh<long double> integrator;
  for (long double z : {0.3L, 1.0L, 4.0L, 12.0L}) {
    long double k0, k1, mom[4];
    bessel_k01_ld(z, k0, k1);
    kernel_moments(z, k0, k1, 3, mom);
    for (int j = 0; j <= 3; ++j) {
      auto f = [&](long double u) {
        long double t = z + u;
        if (t > 5000) return 0.0L;
        return std::pow(t, 2 * j + 1) * boost::math::cyl_bessel_k(0, t);
      };
      long double ref = integrator.integrate(f);
      CAPTURE(z);
      CAPTURE(j);
      CHECK(std::fabs(mom[j] / ref - 1) < 1e-12L);
    }
  }
}
