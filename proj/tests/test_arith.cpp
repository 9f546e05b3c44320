#include <random>

#include "doctest.h"
#include "lcong/arith.hpp"
#include "lcong/ntt.hpp"
#include "lcong/poly.hpp"

using namespace lcong;

TEST_CASE("factored strings round-trip") {
  for (const char* s : {"-2^5*5^3*7*13", "2*5^2/3", "0", "1", "-1", "2^3*5^5/(3*7^2)", "-31/(3^2*5^3)"}) {
    mpq_class x = parse_factored(s);
    CHECK(parse_factored(factored(x)) == x);
  }
  CHECK(factored(mpq_class(-4480)) == "-2^7*5*7");
  CHECK(parse_factored("2^4*31/5") == mpq_class(496, 5));
  CHECK(parse_factored("(3*7^2)") == 147);
  CHECK(factored(mpq_class(50, 3)) == "2*5^2/3");
}

TEST_CASE("valuations, orders and residue symbols") {
  CHECK(valuation(mpz_class(288), 3) == 2);
  CHECK(valuation(i64{-250}, 5) == 3);
  CHECK(mult_order(2, 3) == 2);
  CHECK(mult_order(17, 3) == 2);
  CHECK(mult_order(2, 9) == 6);
  CHECK(legendre(5, 3) == -1);
  CHECK(legendre(7, 3) == 1);
  CHECK(legendre(-11, 3) == 1);
  CHECK(factor(i64{360}) == std::map<i64, int>{{2, 3}, {3, 2}, {5, 1}});
  Sieve sv(100);
  CHECK(sv.primes.size() == 25);
  CHECK(sv.lpf[91] == 7);
}

TEST_CASE("checked arithmetic reports overflow") {
  CHECK_THROWS_AS(checked_mul(i64{1} << 40, i64{1} << 40), OverflowError);
  CHECK_THROWS_AS(ipow(10, 20), OverflowError);
  CHECK(ipow(3, 10) == 59049);
}

TEST_CASE("NTT convolution equals schoolbook") {
  std::mt19937_64 rng(7);
  for (size_t len : {40u, 300u, 1000u}) {
    std::vector<mpz_class> a(len), b(len);
    for (auto& x : a) x = mpz_class(static_cast<long>(rng() % 2000001)) - 1000000;
    for (auto& x : b) x = mpz_class(static_cast<long>(rng() % 2000001)) - 1000000;
    a[3] = mpz_class("123456789012345678901234567890");
    CHECK(convolve(a, b, len) == convolve_naive(a, b, len));
    std::vector<__int128> ai(len), bi(len);
    for (size_t i = 0; i < len; ++i) {
      ai[i] = static_cast<__int128>(static_cast<long>(rng() % 2000001) - 1000000) * 1000000007;
      bi[i] = static_cast<long>(rng() % 2000001) - 1000000;
    }
    auto ci = convolve_i128(ai, bi, len);
    auto sq = convolve_i128(ai, ai, len);
    std::vector<mpz_class> am(len), bm(len);
    for (size_t i = 0; i < len; ++i) {
      am[i] = mpz_class(static_cast<long>(ai[i] / 1000000007)) * 1000000007;
      bm[i] = static_cast<long>(bi[i]);
    }
    auto want = convolve_naive(am, bm, len);
    auto want_sq = convolve_naive(am, am, len);
    bool same = true;
    for (size_t i = 0; i < len; ++i) {
      mpz_class got = mpz_class(static_cast<long>(ci[i] / (__int128{1} << 62))) * (mpz_class(1) << 62) +
                      mpz_class(static_cast<long>(ci[i] % (__int128{1} << 62)));
      mpz_class got_sq = mpz_class(static_cast<long>(sq[i] / (__int128{1} << 62))) * (mpz_class(1) << 62) +
                         mpz_class(static_cast<long>(sq[i] % (__int128{1} << 62)));
      same = same && got == want[i] && got_sq == want_sq[i];
    }
    CHECK(same);
  }
  std::vector<__int128> big(64, __int128{1} << 100);
  CHECK_THROWS_AS(convolve_i128(big, big, 64), OverflowError);
}

TEST_CASE("polynomials") {
  Poly a{1, 4, 8}, b{1, -4, 8};
  CHECK(poly_equal(poly_mul(a, b), Poly{1, 0, 0, 0, 64}));
  CHECK(poly_equal(poly_divexact(poly_mul(a, b), a), b));
  CHECK_THROWS(poly_divexact(Poly{1, 1}, Poly{1, 2}));
  CHECK(poly_eval(a, mpq_class(1, 2)) == 5);
  CHECK(poly_equal(poly_inflate(Poly{1, -1}, 2), Poly{1, 0, -1}));
  CHECK(poly_equal(poly_scale_var(Poly{1, 1}, 3), Poly{1, 3}));
  Poly inv = series_inverse(Poly{1, -1}, 4);
  CHECK(poly_equal(inv, Poly{1, 1, 1, 1, 1}));
  CHECK(poly_equal(poly_pow(Poly{1, 1}, 3), Poly{1, 3, 3, 1}));
}
