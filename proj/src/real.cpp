#include "lcong/real.hpp"

#include <cmath>
#include <vector>

namespace lcong {

std::string Real::str(int digits) const {
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return buf.data();
}

Real pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x.prec());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x.prec());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow_si(const Real& x, long e) {
  Real r(x.prec());
  mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real gamma_int(long n, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_fac_ui(r.get(), static_cast<unsigned long>(n - 1), MPFR_RNDN);
  return r;
}

Real gamma(const Real& x) {
  Real r(x.prec());
  mpfr_gamma(r.get(), x.get(), MPFR_RNDN);
  return r;
}

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

}  // namespace lcong
