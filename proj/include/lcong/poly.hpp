// Dense univariate polynomials with integer coefficients, low degree first.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lcong {

using Poly = std::vector<mpz_class>;

void poly_trim(Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& a, unsigned e);
// f(c*X)
Poly poly_scale_var(const Poly& a, const mpz_class& c);
// f(X^r)
Poly poly_inflate(const Poly& a, unsigned r);
// Exact quotient; throws std::domain_error if the division leaves a remainder.
Poly poly_divexact(const Poly& num, const Poly& den);
mpq_class poly_eval(const Poly& a, const mpq_class& x);
// First n+1 coefficients of 1/a as a power series; a[0] must be 1.
Poly series_inverse(const Poly& a, int n);
bool poly_equal(Poly a, Poly b);
std::string poly_str(const Poly& a, const char* var = "X");

}  // namespace lcong
