#include "lcong/ntt.hpp"

#include <algorithm>
#include <stdexcept>

#include "lcong/arith.hpp"

namespace lcong {

namespace {

std::uint32_t find_generator(std::uint32_t p) {
  auto fs = prime_divisors(static_cast<i64>(p) - 1);
  for (std::uint32_t g = 2;; ++g) {
    bool ok = true;
    for (i64 q : fs) {
      if (powmod(g, (p - 1) / static_cast<u64>(q), p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

void transform(std::vector<std::uint32_t>& a, const NttPrime& P, bool inverse) {
  const u64 p = P.p;
  const size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  // Twiddles with Shoup quotients w' = floor(w 2^32 / p): a w mod p = a w - ((a w') >> 32) p, up to one p.
  std::vector<std::uint32_t> w, wq;
  for (size_t len = 2; len <= n; len <<= 1) {
    u64 wl = powmod(P.g, (p - 1) / len, p);
    if (inverse) wl = powmod(wl, p - 2, p);
    size_t half = len / 2;
    w.resize(half);
    wq.resize(half);
    w[0] = 1;
    for (size_t i = 1; i < half; ++i) w[i] = static_cast<std::uint32_t>(w[i - 1] * wl % p);
    for (size_t i = 0; i < half; ++i) wq[i] = static_cast<std::uint32_t>((static_cast<u64>(w[i]) << 32) / p);
    for (size_t i = 0; i < n; i += len) {
      std::uint32_t* lo = a.data() + i;
      std::uint32_t* hi = lo + half;
      for (size_t j = 0; j < half; ++j) {
        u64 x = hi[j];
        u64 v = x * w[j] - ((x * wq[j]) >> 32) * p;
        if (v >= p) v -= p;
        u64 u = lo[j];
        lo[j] = static_cast<std::uint32_t>(u + v >= p ? u + v - p : u + v);
        hi[j] = static_cast<std::uint32_t>(u >= v ? u - v : u + p - v);
      }
    }
  }
  if (inverse) {
    u64 inv_n = powmod(n, p - 2, p);
    for (auto& x : a) x = static_cast<std::uint32_t>(x * inv_n % p);
  }
}

std::vector<std::uint32_t> reduce(const std::vector<mpz_class>& a, size_t n, std::uint32_t p) {
  std::vector<std::uint32_t> r(n, 0);
  for (size_t i = 0; i < a.size() && i < n; ++i) {
    unsigned long m = mpz_fdiv_ui(a[i].get_mpz_t(), p);
    r[i] = static_cast<std::uint32_t>(m);
  }
  return r;
}

size_t bit_length(const mpz_class& x) { return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2); }

size_t bit_length(i128 x) {
  unsigned __int128 u = x < 0 ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  size_t b = 0;
  while (u) {
    u >>= 1;
    ++b;
  }
  return b;
}

std::vector<const NttPrime*> pick_primes(size_t n, size_t need_bits) {
  int logn = 0;
  while ((size_t{1} << logn) < n) ++logn;
  std::vector<const NttPrime*> use;
  size_t have_bits = 0;
  for (const auto& P : ntt_primes()) {
    if (P.two_adic < logn) continue;
    use.push_back(&P);
    have_bits += 29;  // every prime in the list exceeds 2^29
    if (have_bits > need_bits) return use;
  }
  throw std::runtime_error("convolve: coefficient bound exceeds modulus product");
}

// Mixed-radix digits of the residues at index t (Garner).
void garner_digits(const std::vector<std::vector<std::uint32_t>>& res, const std::vector<const NttPrime*>& use,
                   const std::vector<std::vector<u64>>& inv, size_t t, std::vector<u64>& d) {
  for (size_t i = 0; i < use.size(); ++i) {
    u64 pi = use[i]->p;
    u64 x = res[i][t];
    for (size_t j = 0; j < i; ++j) {
      u64 diff = (x + pi - d[j] % pi) % pi;
      x = diff * inv[j][i] % pi;
    }
    d[i] = x;
  }
}

std::vector<std::vector<u64>> garner_inverses(const std::vector<const NttPrime*>& use) {
  const size_t k = use.size();
  std::vector<std::vector<u64>> inv(k, std::vector<u64>(k, 0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < i; ++j) inv[j][i] = powmod(use[j]->p % use[i]->p, use[i]->p - 2, use[i]->p);
  return inv;
}

}  // namespace

const std::vector<NttPrime>& ntt_primes() {
  static const std::vector<NttPrime> primes = [] {
    std::vector<NttPrime> v;
    for (std::uint32_t p : {998244353u, 469762049u, 167772161u, 754974721u, 1224736769u, 2013265921u, 3221225473u,
                            3489660929u, 2281701377u, 3892314113u, 1811939329u, 2483027969u, 2885681153u}) {
      int t = 0;
      while (((p - 1) >> t & 1) == 0) ++t;
      v.push_back({p, find_generator(p), t});
    }
    return v;
  }();
  return primes;
}

std::vector<mpz_class> convolve_naive(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                                      size_t out_len) {
  std::vector<mpz_class> c(out_len, 0);
  for (size_t i = 0; i < a.size() && i < out_len; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size() && i + j < out_len; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

std::vector<mpz_class> convolve(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                                size_t out_len) {
  size_t la = std::min(a.size(), out_len), lb = std::min(b.size(), out_len);
  if (la == 0 || lb == 0) return std::vector<mpz_class>(out_len, 0);
  if (std::min(la, lb) < 32) return convolve_naive(a, b, out_len);

  size_t ba = 0, bb = 0;
  for (size_t i = 0; i < la; ++i) ba = std::max(ba, bit_length(a[i]));
  for (size_t i = 0; i < lb; ++i) bb = std::max(bb, bit_length(b[i]));
  size_t terms = std::min(la, lb);
  size_t need_bits = ba + bb + bit_length(mpz_class(static_cast<unsigned long>(terms))) + 2;

  size_t n = 1;
  while (n < la + lb - 1) n <<= 1;
  auto use = pick_primes(n, need_bits);

  std::vector<std::vector<std::uint32_t>> res;
  for (const NttPrime* P : use) {
    auto fa = reduce(a, std::min(la, n), P->p);
    fa.resize(n, 0);
    auto fb = reduce(b, std::min(lb, n), P->p);
    fb.resize(n, 0);
    transform(fa, *P, false);
    transform(fb, *P, false);
    for (size_t i = 0; i < n; ++i) fa[i] = static_cast<std::uint32_t>(static_cast<u64>(fa[i]) * fb[i] % P->p);
    transform(fa, *P, true);
    res.push_back(std::move(fa));
  }

  // Garner: x = r0 + p0*(d1 + p1*(d2 + ...)), digits in [0, p_i).
  const size_t k = use.size();
  auto inv = garner_inverses(use);
  mpz_class M = 1;
  for (auto* P : use) M *= static_cast<unsigned long>(P->p);
  mpz_class half = M / 2;

  std::vector<mpz_class> c(out_len, 0);
  std::vector<u64> d(k);
  size_t lim = std::min(out_len, la + lb - 1);
  for (size_t t = 0; t < lim; ++t) {
    garner_digits(res, use, inv, t, d);
    mpz_class& v = c[t];
    v = static_cast<unsigned long>(d[k - 1]);
    for (size_t i = k - 1; i-- > 0;) {
      v *= static_cast<unsigned long>(use[i]->p);
      v += static_cast<unsigned long>(d[i]);
    }
    if (v > half) v -= M;
  }
  return c;
}

std::vector<i128> convolve_i128(const std::vector<i128>& a, const std::vector<i128>& b, size_t out_len) {
  size_t la = std::min(a.size(), out_len), lb = std::min(b.size(), out_len);
  std::vector<i128> c(out_len, 0);
  if (la == 0 || lb == 0) return c;
  size_t ba = 0, bb = 0;
  for (size_t i = 0; i < la; ++i) ba = std::max(ba, bit_length(a[i]));
  for (size_t i = 0; i < lb; ++i) bb = std::max(bb, bit_length(b[i]));
  size_t need_bits = ba + bb + bit_length(static_cast<i128>(std::min(la, lb))) + 2;
  if (need_bits > 120) throw OverflowError("convolve_i128: result may exceed int128");
  if (std::min(la, lb) < 32) {
    for (size_t i = 0; i < la; ++i)
      for (size_t j = 0; j < lb && i + j < out_len; ++j) c[i + j] += a[i] * b[j];
    return c;
  }
  size_t n = 1;
  while (n < la + lb - 1) n <<= 1;
  auto use = pick_primes(n, need_bits);
  const size_t lim = std::min(out_len, la + lb - 1);
  const bool square = la == lb && std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(la), b.begin());
  std::vector<std::vector<std::uint32_t>> res;
  for (const NttPrime* P : use) {
    const i128 p = P->p;
    auto red = [p](i128 x) { return static_cast<std::uint32_t>(((x % p) + p) % p); };
    std::vector<std::uint32_t> fa(n, 0);
    for (size_t i = 0; i < la; ++i) fa[i] = red(a[i]);
    transform(fa, *P, false);
    if (square) {
      for (auto& x : fa) x = static_cast<std::uint32_t>(static_cast<u64>(x) * x % P->p);
    } else {
      std::vector<std::uint32_t> fb(n, 0);
      for (size_t i = 0; i < lb; ++i) fb[i] = red(b[i]);
      transform(fb, *P, false);
      for (size_t i = 0; i < n; ++i) fa[i] = static_cast<std::uint32_t>(static_cast<u64>(fa[i]) * fb[i] % P->p);
    }
    transform(fa, *P, true);
    fa.resize(lim);
    fa.shrink_to_fit();
    res.push_back(std::move(fa));
  }
  const size_t k = use.size();
  auto inv = garner_inverses(use);
  unsigned __int128 M = 1;
  for (auto* P : use) M *= P->p;
  std::vector<u64> d(k);
  for (size_t t = 0; t < lim; ++t) {
    garner_digits(res, use, inv, t, d);
    unsigned __int128 v = d[k - 1];
    for (size_t i = k - 1; i-- > 0;) v = v * use[i]->p + d[i];
    c[t] = v > M / 2 ? -static_cast<i128>(M - v) : static_cast<i128>(v);
  }
  return c;
}

}  // namespace lcong
