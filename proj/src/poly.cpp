#include "lcong/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace lcong {

void poly_trim(Poly& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  if (a.empty()) a.push_back(0);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

Poly poly_pow(const Poly& a, unsigned e) {
  Poly r{1};
  for (unsigned i = 0; i < e; ++i) r = poly_mul(r, a);
  return r;
}

Poly poly_scale_var(const Poly& a, const mpz_class& c) {
  Poly r(a.size());
  mpz_class t = 1;
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] * t;
    t *= c;
  }
  poly_trim(r);
  return r;
}

Poly poly_inflate(const Poly& a, unsigned r) {
  Poly out((a.size() - 1) * r + 1, 0);
  for (size_t i = 0; i < a.size(); ++i) out[i * r] = a[i];
  return out;
}

Poly poly_divexact(const Poly& num, const Poly& den) {
  Poly n = num, d = den;
  poly_trim(n);
  poly_trim(d);
  if (d.size() == 1 && d[0] == 0) throw std::domain_error("poly_divexact: zero divisor");
  if (n.size() < d.size()) {
    if (n.size() == 1 && n[0] == 0) return Poly{0};
    throw std::domain_error("poly_divexact: inexact division");
  }
  Poly q(n.size() - d.size() + 1, 0);
  for (size_t i = q.size(); i-- > 0;) {
    mpz_class c = n[i + d.size() - 1];
    if (!mpz_divisible_p(c.get_mpz_t(), d.back().get_mpz_t())) throw std::domain_error("poly_divexact: inexact division");
    q[i] = c / d.back();
    for (size_t j = 0; j < d.size(); ++j) n[i + j] -= q[i] * d[j];
  }
  for (auto& x : n)
    if (x != 0) throw std::domain_error("poly_divexact: inexact division");
  poly_trim(q);
  return q;
}

mpq_class poly_eval(const Poly& a, const mpq_class& x) {
  mpq_class r = 0;
  for (size_t i = a.size(); i-- > 0;) r = r * x + mpq_class(a[i]);
  r.canonicalize();
  return r;
}

Poly series_inverse(const Poly& a, int n) {
  if (a.empty() || a[0] != 1) throw std::invalid_argument("series_inverse: constant term must be 1");
  Poly r(static_cast<size_t>(n) + 1, 0);
  r[0] = 1;
  for (int e = 1; e <= n; ++e) {
    mpz_class c = 0;
    for (int i = 1; i < static_cast<int>(a.size()) && i <= e; ++i) c -= a[i] * r[e - i];
    r[e] = c;
  }
  return r;
}

bool poly_equal(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  return a == b;
}

std::string poly_str(const Poly& a, const char* var) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    mpz_class c = a[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    c = abs(c);
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace lcong
