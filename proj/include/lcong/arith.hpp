// Elementary integer arithmetic shared by all modules.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcong {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 multiply");
  return r;
}
inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 add");
  return r;
}
inline i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int128 multiply");
  return r;
}
inline i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int128 add");
  return r;
}

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);
i64 ipow(i64 base, unsigned e);  // checked
mpz_class zpow(long base, unsigned e);

bool is_prime(u64 n);
// Legendre symbol (a/p) for an odd prime p.
int legendre(i64 a, i64 p);
// Kronecker-style (q/p) for the odd prime p: the Legendre symbol of q mod p.
inline int residue_symbol(i64 q, i64 p) { return legendre(q, p); }
// Multiplicative order of a modulo m (gcd(a,m)=1).
u64 mult_order(u64 a, u64 m);
// p-adic valuation of a nonzero integer.
int valuation(i64 n, i64 p);
int valuation(const mpz_class& n, long p);
// Largest e with p^e <= n.
int max_power(i64 n, i64 p);

// Prime factorization by trial division.
std::map<i64, int> factor(i64 n);
std::vector<i64> prime_divisors(i64 n);
std::map<long, int> factor(const mpz_class& n);

// Sieve of smallest prime factors on [0, n].
struct Sieve {
  explicit Sieve(i64 n);
  i64 limit;
  std::vector<std::uint32_t> lpf;
  std::vector<std::uint32_t> primes;
  bool is_prime(i64 k) const { return k >= 2 && lpf[k] == static_cast<std::uint32_t>(k); }
};

// "-2^5*5^3*7*13", "2*5^2/3", "0", "1".
std::string factored(const mpq_class& x);
std::string factored(const mpz_class& x);
// Inverse of factored(); accepts the same grammar.
mpq_class parse_factored(const std::string& s);

std::string to_string(i128 v);

}  // namespace lcong
