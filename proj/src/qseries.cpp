#include "lcong/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

#include "lcong/ntt.hpp"

namespace lcong {

namespace {

mpz_class from_i128(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
  mpz_class hi = static_cast<unsigned long>(static_cast<u64>(u >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<u64>(u));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

// sigma_{e}(n) for 1 <= n <= n_max.
std::vector<i128> divisor_power_sums(int e, long n_max) {
  std::vector<i128> s(static_cast<size_t>(n_max) + 1, 0);
  for (long d = 1; d <= n_max; ++d) {
    i128 de = 1;
    for (int i = 0; i < e; ++i) de *= d;
    for (long m = d; m <= n_max; m += d) s[m] += de;
  }
  return s;
}

PowerSeries factor_series(const SeriesFactor& f, long n_max) {
  if (f.star) return e2star(f.t, n_max);
  PowerSeries e = eisenstein(f.k, n_max);
  return f.t == 1 ? e : dilate(e, f.t);
}

struct LeanSeries {
  std::vector<i128> num;
  i128 den = 1;
};

i128 to_i128(const mpz_class& x) {
  if (mpz_sizeinbase(x.get_mpz_t(), 2) > 120) throw OverflowError("value exceeds int128");
  mpz_class a = abs(x);
  unsigned __int128 u = static_cast<unsigned __int128>(mpz_class(a >> 64).get_ui()) << 64;
  u |= mpz_class(a & mpz_class("18446744073709551615")).get_ui();
  return x < 0 ? -static_cast<i128>(u) : static_cast<i128>(u);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void lean_normalize(LeanSeries& s) {
  i128 g = s.den;
  for (i128 x : s.num) {
    if (g == 1) return;
    if (x != 0) g = gcd128(g, x);
  }
  g = g < 0 ? -g : g;
  for (auto& x : s.num) x /= g;
  s.den /= g;
}

LeanSeries lean_eisenstein(int k, long n_max) {
  if ((k - 1) * std::log2(static_cast<double>(n_max) + 1) > 118) throw OverflowError("divisor sums exceed int128");
  mpq_class c0 = -bernoulli(k) / mpq_class(2 * k);
  c0.canonicalize();
  LeanSeries r;
  r.den = to_i128(c0.get_den());
  r.num = divisor_power_sums(k - 1, n_max);
  r.num[0] = to_i128(c0.get_num());
  for (long n = 1; n <= n_max; ++n) r.num[n] = checked_mul(r.num[n], r.den);
  return r;
}

LeanSeries lean_factor(const SeriesFactor& f, long n_max, std::map<int, LeanSeries>& cache) {
  auto it = cache.find(f.k);
  if (it == cache.end()) it = cache.emplace(f.k, lean_eisenstein(f.k, n_max)).first;
  const LeanSeries& e = it->second;
  LeanSeries r;
  r.den = e.den;
  if (f.star) {
    r.num = e.num;
    for (long i = 0; i * f.t <= n_max; ++i) r.num[i * f.t] = checked_add(r.num[i * f.t], checked_mul(static_cast<i128>(-f.t), e.num[i]));
    lean_normalize(r);
    return r;
  }
  if (f.t == 1) return e;
  r.num.assign(e.num.size(), 0);
  for (long i = 0; i * f.t <= n_max; ++i) r.num[i * f.t] = e.num[i];
  return r;
}

// Numerators over a common denominator; throws OverflowError when int128 does not suffice.
LeanSeries lean_combo(const EisensteinCombo& combo, long n_max) {
  LeanSeries total;
  total.num.assign(static_cast<size_t>(n_max) + 1, 0);
  std::map<int, LeanSeries> cache;
  for (const auto& term : combo.terms) {
    LeanSeries prod = lean_factor(term.factors.at(0), n_max, cache);
    for (size_t i = 1; i < term.factors.size(); ++i) {
      const SeriesFactor& a = term.factors[i - 1];
      const SeriesFactor& b = term.factors[i];
      LeanSeries g = i == 1 && a.k == b.k && a.t == b.t && a.star == b.star ? prod : lean_factor(b, n_max, cache);
      prod.num = convolve_i128(prod.num, g.num, prod.num.size());
      prod.den = checked_mul(prod.den, g.den);
      lean_normalize(prod);
    }
    i128 cn = to_i128(term.coeff.get_num()), cd = checked_mul(to_i128(term.coeff.get_den()), prod.den);
    i128 l = checked_mul(total.den / gcd128(total.den, cd), cd);
    i128 ft = l / total.den, fp = checked_mul(cn, l / cd);
    for (size_t n = 0; n < total.num.size(); ++n)
      total.num[n] = checked_add(checked_mul(total.num[n], ft), checked_mul(prod.num[n], fp));
    total.den = l;
    lean_normalize(total);
  }
  if (total.den < 0) {
    total.den = -total.den;
    for (auto& x : total.num) x = -x;
  }
  return total;
}

}  // namespace

mpq_class PowerSeries::coeff(long n) const {
  mpq_class r(num[n], den);
  r.canonicalize();
  return r;
}

void PowerSeries::normalize() {
  if (den < 0) {
    den = -den;
    for (auto& x : num) x = -x;
  }
  mpz_class g = den;
  for (const auto& x : num) {
    if (g == 1) break;
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g != 1) {
    for (auto& x : num) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    den /= g;
  }
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  if (a.n_max() != b.n_max()) throw std::invalid_argument("series truncation mismatch");
  PowerSeries r;
  mpz_lcm(r.den.get_mpz_t(), a.den.get_mpz_t(), b.den.get_mpz_t());
  mpz_class fa = r.den / a.den, fb = r.den / b.den;
  r.num.resize(a.num.size());
  for (size_t i = 0; i < a.num.size(); ++i) r.num[i] = a.num[i] * fa + b.num[i] * fb;
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  if (a.n_max() != b.n_max()) throw std::invalid_argument("series truncation mismatch");
  PowerSeries r;
  r.num = convolve(a.num, b.num, a.num.size());
  r.den = a.den * b.den;
  return r;
}

PowerSeries operator*(const mpq_class& c, const PowerSeries& a) {
  PowerSeries r;
  r.den = a.den * c.get_den();
  r.num.resize(a.num.size());
  for (size_t i = 0; i < a.num.size(); ++i) r.num[i] = a.num[i] * c.get_num();
  return r;
}

PowerSeries dilate(const PowerSeries& a, long t) {
  if (t < 1) throw std::invalid_argument("dilate: t must be positive");
  PowerSeries r;
  r.den = a.den;
  r.num.assign(a.num.size(), 0);
  for (long i = 0; i * t <= a.n_max(); ++i) r.num[i * t] = a.num[i];
  return r;
}

mpq_class bernoulli(int k) {
  std::vector<mpq_class> B(static_cast<size_t>(k) + 1);
  B[0] = 1;
  for (int m = 1; m <= k; ++m) {
    mpq_class s = 0;
    mpz_class binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      s += mpq_class(binom) * B[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    B[m] = -s / mpq_class(m + 1);
    B[m].canonicalize();
  }
  return B[k];
}

PowerSeries eisenstein(int k, long n_max) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("eisenstein: weight must be even and >= 2");
  if (n_max < 0) throw std::invalid_argument("eisenstein: negative truncation");
  mpq_class c0 = -bernoulli(k) / mpq_class(2 * k);
  c0.canonicalize();
  PowerSeries r;
  r.den = c0.get_den();
  r.num.resize(static_cast<size_t>(n_max) + 1);
  r.num[0] = c0.get_num();
  auto s = divisor_power_sums(k - 1, n_max);
  for (long n = 1; n <= n_max; ++n) r.num[n] = from_i128(s[n]) * r.den;
  return r;
}

PowerSeries e2star(long t, long n_max) {
  if (t < 2) throw std::invalid_argument("e2star: t must be >= 2");
  PowerSeries e2 = eisenstein(2, n_max);
  PowerSeries r = e2 + mpq_class(-t) * dilate(e2, t);
  r.normalize();
  return r;
}

void IntSeq::set(long n, const mpz_class& v) {
  if (!wide_) {
    if (v.fits_slong_p()) {
      small_[n] = v.get_si();
      return;
    }
    widen();
  }
  big_[n] = v;
}

void IntSeq::widen() {
  if (wide_) return;
  big_.resize(small_.size());
  for (size_t i = 0; i < small_.size(); ++i) big_[i] = static_cast<long>(small_[i]);
  small_.clear();
  small_.shrink_to_fit();
  wide_ = true;
}

int Form::ord_level(long q) const {
  long n = level;
  int e = 0;
  while (n % q == 0) {
    n /= q;
    ++e;
  }
  return e;
}

std::vector<std::string> named_form_ids() { return {"5w4", "7w4", "5w6", "121w4"}; }

FormSpec named_form(const std::string& id) {
  auto E = [](int k, long t) { return SeriesFactor{k, t, false}; };
  auto S = [](long t) { return SeriesFactor{2, t, true}; };
  if (id == "5w4")
    return {id, 5, 4,
            EisensteinCombo{{{mpq_class(-250, 3), {E(4, 5)}}, {mpq_class(-10, 3), {E(4, 1)}}, {13, {S(5), S(5)}}}}};
  if (id == "7w4")
    return {id, 7, 4,
            EisensteinCombo{{{mpq_class(-147, 2), {E(4, 7)}}, {mpq_class(-3, 2), {E(4, 1)}}, {5, {S(7), S(7)}}}}};
  if (id == "5w6")
    return {id, 5, 6,
            EisensteinCombo{{{mpq_class(521, 6), {E(6, 5)}}, {mpq_class(-1, 30), {E(6, 1)}}, {248, {S(5), E(4, 5)}}}}};
  if (id == "121w4") return {id, 121, 4, CMCurve{{0, -1, 1, -7, 10}, 121, 11}};
  throw std::invalid_argument("unknown form id: " + id);
}

FormSpec parse_form_descriptor(const std::string& text) {
  for (const auto& id : named_form_ids())
    if (text == id) return named_form(id);
  FormSpec spec;
  spec.level = 0;
  spec.weight = 0;
  std::string body;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    auto eq = part.find('=');
    std::string key = eq == std::string::npos ? "" : part.substr(0, eq);
    if (key == "level") spec.level = std::stol(part.substr(eq + 1));
    else if (key == "weight") spec.weight = std::stoi(part.substr(eq + 1));
    else body += part;
  }
  if (spec.level <= 0 || spec.weight < 2 || body.empty())
    throw std::invalid_argument("form descriptor needs level=..;weight=..;<combination>");
  body.erase(std::remove_if(body.begin(), body.end(), ::isspace), body.end());
  EisensteinCombo combo;
  std::regex term_re(R"(([+-]?[0-9]+(?:/[0-9]+)?)((?:\*E[0-9]+s?\(q(?:\^[0-9]+)?\))+))");
  std::regex fac_re(R"(E([0-9]+)(s?)\(q(?:\^([0-9]+))?\))");
  size_t consumed = 0;
  for (auto it = std::sregex_iterator(body.begin(), body.end(), term_re); it != std::sregex_iterator(); ++it) {
    if (static_cast<size_t>(it->position()) != consumed) throw std::invalid_argument("bad combination near: " + body.substr(consumed));
    consumed += static_cast<size_t>(it->length());
    ComboTerm t;
    std::string c = (*it)[1].str();
    if (!c.empty() && c[0] == '+') c = c.substr(1);
    t.coeff = mpq_class(c);
    t.coeff.canonicalize();
    std::string facs = (*it)[2].str();
    for (auto jt = std::sregex_iterator(facs.begin(), facs.end(), fac_re); jt != std::sregex_iterator(); ++jt) {
      SeriesFactor f;
      f.k = std::stoi((*jt)[1].str());
      f.star = !(*jt)[2].str().empty();
      f.t = (*jt)[3].matched ? std::stol((*jt)[3].str()) : 1;
      if (f.star && f.k != 2) throw std::invalid_argument("starred factor must be E2s");
      t.factors.push_back(f);
    }
    combo.terms.push_back(t);
  }
  if (consumed != body.size() || combo.terms.empty()) throw std::invalid_argument("bad combination: " + body);
  spec.source = combo;
  std::ostringstream id;
  id << "custom_N" << spec.level << "_k" << spec.weight << "_" << std::hex << std::hash<std::string>{}(body);
  spec.id = id.str();
  return spec;
}

PowerSeries combo_series(const EisensteinCombo& combo, long n_max) {
  PowerSeries total;
  total.num.assign(static_cast<size_t>(n_max) + 1, 0);
  for (const auto& term : combo.terms) {
    PowerSeries prod = factor_series(term.factors.at(0), n_max);
    for (size_t i = 1; i < term.factors.size(); ++i) {
      prod = prod * factor_series(term.factors[i], n_max);
      prod.normalize();
    }
    total = total + term.coeff * prod;
    total.normalize();
  }
  return total;
}

std::vector<mpq_class> combo_series_rational(const EisensteinCombo& combo, long n_max) {
  auto as_q = [n_max](const SeriesFactor& f) {
    std::vector<mpq_class> s(static_cast<size_t>(n_max) + 1, 0);
    auto base = [n_max](int k) {
      std::vector<mpq_class> e(static_cast<size_t>(n_max) + 1, 0);
      e[0] = -bernoulli(k) / mpq_class(2 * k);
      for (long n = 1; n <= n_max; ++n) {
        mpz_class sum = 0;
        for (long d = 1; d <= n; ++d)
          if (n % d == 0) sum += zpow(d, static_cast<unsigned>(k - 1));
        e[n] = sum;
      }
      return e;
    };
    auto e = base(f.k);
    for (long i = 0; i * f.t <= n_max; ++i) s[i * f.t] += f.star ? -mpq_class(f.t) * e[i] : e[i];
    if (f.star)
      for (long i = 0; i <= n_max; ++i) s[i] += e[i];
    return s;
  };
  std::vector<mpq_class> total(static_cast<size_t>(n_max) + 1, 0);
  for (const auto& term : combo.terms) {
    auto prod = as_q(term.factors.at(0));
    for (size_t i = 1; i < term.factors.size(); ++i) {
      auto g = as_q(term.factors[i]);
      std::vector<mpq_class> r(prod.size(), 0);
      for (size_t a = 0; a < prod.size(); ++a)
        for (size_t b = 0; a + b < prod.size(); ++b) r[a + b] += prod[a] * g[b];
      prod = r;
    }
    for (long n = 0; n <= n_max; ++n) total[n] += term.coeff * prod[n];
  }
  for (auto& x : total) x.canonicalize();
  return total;
}

namespace {

void check_ramanujan(const Form& f) {
  Sieve sv(std::min<long>(f.n_max(), 100000));
  for (auto p : sv.primes) {
    if (f.level % p == 0) continue;
    double bound = 2.0 * std::pow(static_cast<double>(p), (f.weight - 1) / 2.0) * (1 + 1e-12);
    double ap = f.a(p).get_d();
    if (std::fabs(ap) > bound)
      throw NotEigenform("Ramanujan bound violated at p=" + std::to_string(p) + " (coefficient overflow or bad input)");
  }
}

}  // namespace

Form build_form(const FormSpec& spec, long n_max) {
  if (n_max < 1) throw std::invalid_argument("build_form: n_max must be >= 1");
  if (std::holds_alternative<CMCurve>(spec.source)) {
    Form f = cm_coefficients(std::get<CMCurve>(spec.source), spec.weight, n_max);
    f.id = spec.id;
    return f;
  }
  const auto& combo = std::get<EisensteinCombo>(spec.source);
  Form f{spec.id, spec.level, spec.weight, spec.source, IntSeq(n_max)};
  auto validate = [&](const mpz_class& c0, const mpz_class& c1, const mpz_class& den, auto&& num) {
    auto q = [&](const mpz_class& x) {
      mpq_class r(x, den);
      r.canonicalize();
      return r.get_str();
    };
    if (c0 != 0) throw NotEigenform("constant term is " + q(c0) + ", not 0");
    if (c1 != den) throw NotEigenform("coefficient of q is " + q(c1) + ", not 1");
    for (long n = 1; n <= n_max; ++n) {
      mpz_class x = num(n);
      if (!mpz_divisible_p(x.get_mpz_t(), den.get_mpz_t())) {
        throw NotEigenform("not a normalized eigenform: coefficient of q^" + std::to_string(n) + " is " + q(x));
      }
      f.coeffs.set(n, x / den);
    }
  };
  bool lean = true;
  try {
    LeanSeries t = lean_combo(combo, n_max);
    validate(from_i128(t.num[0]), from_i128(t.num[1]), from_i128(t.den), [&](long n) { return from_i128(t.num[n]); });
  } catch (const OverflowError&) {
    lean = false;
  }
  if (!lean) {
    PowerSeries s = combo_series(combo, n_max);
    s.normalize();
    validate(s.num[0], s.num[1], s.den, [&](long n) { return s.num[n]; });
  }
  check_ramanujan(f);
  return f;
}

long cm_trace_naive(const CMCurve& e, long p) {
  const auto [a1, a2, a3, a4, a6] = e.a;
  auto md = [p](long x) { return ((x % p) + p) % p; };
  long count = 1;  // point at infinity
  if (p < 64) {
    for (long x = 0; x < p; ++x)
      for (long y = 0; y < p; ++y) {
        long lhs = md(y * y + a1 * x * y + a3 * y);
        long rhs = md(x * x % p * x + a2 * x % p * x + a4 * x + a6);
        if (lhs == rhs) ++count;
      }
    return p + 1 - count;
  }
  std::vector<signed char> chi(static_cast<size_t>(p), -1);
  chi[0] = 0;
  for (long x = 1; x < p; ++x) chi[static_cast<size_t>(x * x % p)] = 1;
  long sum = 0;
  for (long x = 0; x < p; ++x) {
    long f = md(4 * md(md(x * x % p * x) + md(a2 * md(x * x)) + md(a4 * x) + a6) + md(md(a1 * x) + a3) * md(md(a1 * x) + a3));
    sum += chi[static_cast<size_t>(f)];
  }
  return -sum;
}

namespace {

// Square root of a mod p (p odd prime, a a residue).
u64 sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  u64 q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = static_cast<u64>(s), c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

long isqrt(long n) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

long cm_trace_fast(long p, long D, int sign) {
  if (p == 2 || p == D) throw std::invalid_argument("cm_trace_fast: p must be odd and prime to D");
  if (legendre(-D, p) != 1) return 0;
  // Cornacchia for x^2 + D y^2 = 4p.
  u64 x0 = sqrt_mod(static_cast<u64>(((-D) % p + p) % p), static_cast<u64>(p));
  if ((x0 & 1) != static_cast<u64>(D & 1)) x0 = static_cast<u64>(p) - x0;
  long a = 2 * p, b = static_cast<long>(x0), lim = isqrt(4 * p);
  while (b > lim) {
    long r = a % b;
    a = b;
    b = r;
  }
  long rest = 4 * p - b * b;
  if (rest % D != 0) throw std::runtime_error("cm_trace_fast: Cornacchia failed");
  long y = isqrt(rest / D);
  if (y * y * D != rest) throw std::runtime_error("cm_trace_fast: Cornacchia failed");
  long x = b;
  long half = x * ((D + 1) / 2) % D;  // x/2 mod D
  return sign * legendre(half, D) * x;
}

IntSeq multiplicative_fill(long n_max, const Sieve& sv, const std::function<mpz_class(long, int)>& pp) {
  IntSeq out(n_max);
  if (n_max >= 1) out.set_small(1, 1);
  for (long n = 2; n <= n_max; ++n) {
    long p = sv.lpf[n];
    long pe = p, r = n / p;
    int e = 1;
    while (r % p == 0) {
      r /= p;
      pe *= p;
      ++e;
    }
    if (r == 1) {
      out.set(n, pp(p, e));
      continue;
    }
    if (!out.wide()) {
      i64 v;
      if (!__builtin_mul_overflow(out.small(pe), out.small(r), &v)) {
        out.set_small(n, v);
        continue;
      }
    }
    out.set(n, out.get(pe) * out.get(r));
  }
  return out;
}

Form cm_coefficients(const CMCurve& e, int k, long n_max, long naive_limit) {
  if (k < 2) throw std::invalid_argument("cm_coefficients: weight must be >= 2");
  if (n_max > 400000000L) throw ResourceError("cm_coefficients: n_max beyond point-counting budget (4e8)");
  const long D = e.cm_disc;
  int sign = 0;
  for (long p = 3; p < 200 && sign == 0; p += 2) {
    if (!is_prime(static_cast<u64>(p)) || e.conductor % p == 0 || legendre(-D, p) != 1) continue;
    long naive = cm_trace_naive(e, p);
    long fast = cm_trace_fast(p, D, 1);
    if (naive == fast) sign = 1;
    else if (naive == -fast) sign = -1;
    else throw std::runtime_error("cm_coefficients: curve does not have CM by Q(sqrt(-D))");
  }
  Sieve sv(n_max);
  // a_p indexed by position in sv.primes; zero at bad primes.
  std::vector<mpz_class> ap(sv.primes.size());
  for (size_t i = 0; i < sv.primes.size(); ++i) {
    long p = sv.primes[i];
    if (e.conductor % p == 0) continue;
    long d = p <= naive_limit ? cm_trace_naive(e, p) : cm_trace_fast(p, D, sign);
    mpz_class t0 = 2, t1 = d;
    for (int j = 2; j <= k - 1; ++j) {
      mpz_class t2 = d * t1 - mpz_class(p) * t0;
      t0 = t1;
      t1 = t2;
    }
    ap[i] = t1;
  }
  auto pp = [&](long p, int ex) -> mpz_class {
    size_t idx = static_cast<size_t>(std::lower_bound(sv.primes.begin(), sv.primes.end(), static_cast<std::uint32_t>(p)) -
                                     sv.primes.begin());
    const mpz_class& a = ap[idx];
    if (e.conductor % p == 0) {
      if (e.conductor % (p * p) == 0) return 0;
      mpz_class r;
      mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(ex));
      return r;
    }
    mpz_class c = zpow(p, static_cast<unsigned>(k - 1));
    mpz_class t0 = 1, t1 = a;
    for (int i = 2; i <= ex; ++i) {
      mpz_class t2 = a * t1 - c * t0;
      t0 = t1;
      t1 = t2;
    }
    return t1;
  };
  Form f{"cm", e.conductor, k, e, multiplicative_fill(n_max, sv, pp)};
  return f;
}

void write_cache(const Form& f, const std::string& path) {
  std::filesystem::path pth(path);
  if (pth.has_parent_path()) std::filesystem::create_directories(pth.parent_path());
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp);
    if (!os) throw std::runtime_error("cannot write cache " + path);
    os << "QSER1 " << f.level << ' ' << f.weight << ' ' << f.n_max() << '\n';
    for (long n = 1; n <= f.n_max(); ++n) {
      if (f.coeffs.wide()) os << f.a(n).get_str() << '\n';
      else os << f.a_small(n) << '\n';
    }
  }
  std::filesystem::rename(tmp, path);
}

std::optional<Form> read_cache(const FormSpec& spec, long n_max, const std::string& path) {
  std::ifstream is(path);
  if (!is) return std::nullopt;
  std::string magic;
  long level = 0, have = 0;
  int weight = 0;
  if (!(is >> magic >> level >> weight >> have) || magic != "QSER1") return std::nullopt;
  if (level != spec.level || weight != spec.weight || have < n_max) return std::nullopt;
  Form f{spec.id, spec.level, spec.weight, spec.source, IntSeq(n_max)};
  std::string tok;
  for (long n = 1; n <= n_max; ++n) {
    if (!(is >> tok)) return std::nullopt;
    f.coeffs.set(n, mpz_class(tok));
  }
  return f;
}

std::string cache_path(const std::string& dir, const FormSpec& spec) {
  return (std::filesystem::path(dir) / (spec.id + ".qser")).string();
}

Form load_or_build(const FormSpec& spec, long n_max, const std::string& cache_dir) {
  if (!cache_dir.empty()) {
    if (auto f = read_cache(spec, n_max, cache_path(cache_dir, spec))) return *f;
  }
  Form f = build_form(spec, n_max);
  if (!cache_dir.empty()) write_cache(f, cache_path(cache_dir, spec));
  return f;
}

}  // namespace lcong
