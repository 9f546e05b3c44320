#include "lcong/arith.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lcong {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((unsigned __int128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

i64 ipow(i64 base, unsigned e) {
  i64 r = 1;
  for (unsigned i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

mpz_class zpow(long base, unsigned e) {
  mpz_class r;
  if (base >= 0) {
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  } else {
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(-base), e);
    if (e & 1) r = -r;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

int legendre(i64 a, i64 p) {
  i64 r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  u64 t = powmod(static_cast<u64>(r), static_cast<u64>((p - 1) / 2), static_cast<u64>(p));
  return t == 1 ? 1 : -1;
}

u64 mult_order(u64 a, u64 m) {
  if (m == 1) return 1;
  u64 x = a % m, k = 1;
  while (x != 1) {
    x = mulmod(x, a, m);
    ++k;
    if (k > m) throw std::invalid_argument("mult_order: not a unit");
  }
  return k;
}

int valuation(i64 n, i64 p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int valuation(const mpz_class& n, long p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  mpz_class t = n;
  int v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

int max_power(i64 n, i64 p) {
  int e = 0;
  i64 x = 1;
  while (x <= n / p) {
    x *= p;
    ++e;
  }
  return e;
}

std::map<i64, int> factor(i64 n) {
  std::map<i64, int> f;
  if (n < 0) n = -n;
  for (i64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

std::vector<i64> prime_divisors(i64 n) {
  std::vector<i64> r;
  for (auto& [p, e] : factor(n)) r.push_back(p);
  return r;
}

std::map<long, int> factor(const mpz_class& n) {
  std::map<long, int> f;
  mpz_class t = abs(n);
  for (long d = 2; d < 1000000; d += (d == 2 ? 1 : 2)) {
    if (t == 1) break;
    mpz_class dd = d;
    if (dd * dd > t) break;
    while (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(d))) {
      ++f[d];
      mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(d));
    }
  }
  if (t > 1) {
    if (!t.fits_slong_p()) throw std::runtime_error("factor: cofactor too large");
    ++f[t.get_si()];
  }
  return f;
}

Sieve::Sieve(i64 n) : limit(n), lpf(static_cast<size_t>(std::max<i64>(n, 1) + 1), 0) {
  for (i64 i = 2; i <= n; ++i) {
    if (lpf[i] == 0) {
      lpf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      i64 j = i * p;
      if (p > lpf[i] || j > n) break;
      lpf[j] = p;
    }
  }
}

static std::string factored_abs(const mpz_class& x) {
  if (x == 1) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto& [p, e] : factor(x)) {
    if (!first) os << '*';
    first = false;
    os << p;
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

std::string factored(const mpz_class& x) {
  if (x == 0) return "0";
  return (x < 0 ? "-" : "") + factored_abs(abs(x));
}

std::string factored(const mpq_class& x) {
  if (x == 0) return "0";
  std::string s = (x < 0 ? "-" : "") + factored_abs(abs(x.get_num()));
  if (x.get_den() != 1) {
    std::string d = factored_abs(x.get_den());
    s += "/" + (d.find('*') != std::string::npos ? "(" + d + ")" : d);
  }
  return s;
}

namespace {
mpz_class parse_product(const std::string& s) {
  mpz_class r = 1;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, '*')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) throw std::invalid_argument("parse_factored: empty factor");
    auto caret = tok.find('^');
    mpz_class b(tok.substr(0, caret));
    unsigned e = caret == std::string::npos ? 1u : static_cast<unsigned>(std::stoul(tok.substr(caret + 1)));
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), b.get_mpz_t(), e);
    r *= t;
  }
  return r;
}
}  // namespace

mpq_class parse_factored(const std::string& in) {
  std::string s;
  for (char c : in)
    if (c != '(' && c != ')' && !std::isspace(static_cast<unsigned char>(c))) s += c;
  bool neg = !s.empty() && s[0] == '-';
  if (neg) s = s.substr(1);
  if (s == "0") return 0;
  auto slash = s.find('/');
  mpq_class r(parse_product(s.substr(0, slash)),
              slash == std::string::npos ? mpz_class(1) : parse_product(s.substr(slash + 1)));
  r.canonicalize();
  return neg ? mpq_class(-r) : r;
}

std::string to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
  std::string s;
  while (u) {
    s += static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  if (neg) s += '-';
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace lcong
