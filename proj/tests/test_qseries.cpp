#include <filesystem>

#include "doctest.h"
#include "lcong/artin.hpp"
#include "lcong/qseries.hpp"
#include "properties.hpp"
#include "reference.hpp"

using namespace lcong;

namespace {

// q ∏ (1 - q^n)^4 (1 - q^{5n})^4
std::vector<mpz_class> eta_product_5(long N) {
  std::vector<mpz_class> e(N + 1, 0);
  e[1] = 1;
  for (long n = 1; n <= N; ++n)
    for (int rep = 0; rep < 4; ++rep) {
      for (long i = N; i >= n; --i) e[i] -= e[i - n];
      if (5 * n <= N)
        for (long i = N; i >= 5 * n; --i) e[i] -= e[i - 5 * n];
    }
  return e;
}

// #E(F_p) for y^2 + y = x^3 - x^2 - 7x + 10 by enumerating (x, y).
long count_points(long p) {
  long c = 1;
  for (long x = 0; x < p; ++x)
    for (long y = 0; y < p; ++y) {
      long l = (y * y + y) % p;
      long r = (((x * x % p) * x - x * x - 7 * x + 10) % p + p) % p;
      if (l == r) ++c;
    }
  return c;
}

}  // namespace

TEST_CASE("eisenstein series") {
  auto e4 = eisenstein(4, 3);
  CHECK(e4.coeff(0) == mpq_class(1, 240));
  CHECK(e4.coeff(1) == 1);
  CHECK(e4.coeff(2) == 9);
  CHECK(e4.coeff(3) == 28);
  auto e6 = eisenstein(6, 1);
  CHECK(e6.coeff(0) == mpq_class(-1, 504));
  CHECK(e6.coeff(1) == 1);
  CHECK(eisenstein(4, 0).n_max() == 0);
  CHECK_THROWS(eisenstein(3, 5));
  CHECK_THROWS(eisenstein(0, 5));
  CHECK(bernoulli(4) == mpq_class(-1, 30));
}

TEST_CASE("e2star") {
  CHECK(e2star(5, 0).coeff(0) == mpq_class(1, 6));
  CHECK(e2star(5, 1).coeff(1) == 1);
  CHECK(e2star(7, 7).coeff(7) == 1);
  CHECK_THROWS(e2star(1, 5));
}

TEST_CASE("first 30 coefficients of the built-in forms") {
  for (const auto& id : named_form_ids()) {
    CAPTURE(id);
    Form f = build_form(named_form(id), 30);
    const auto& want = lcong::ref::kFirst30.at(id);
    for (long n = 1; n <= 30; ++n) CHECK(f.a(n) == want[n - 1]);
  }
}

TEST_CASE("q-expansion prefixes") {
  Form f5 = build_form(named_form("5w4"), 5);
  std::vector<long> w5{1, -4, 2, 8, -5};
  for (long n = 1; n <= 5; ++n) CHECK(f5.a(n) == w5[n - 1]);
  Form f7 = build_form(named_form("7w4"), 5);
  std::vector<long> w7{1, -1, -2, -7, 16};
  for (long n = 1; n <= 5; ++n) CHECK(f7.a(n) == w7[n - 1]);
  Form c = build_form(named_form("121w4"), 16);
  CHECK(c.a(3) == 8);
  CHECK(c.a(5) == 18);
  CHECK(c.a(9) == 37);
  CHECK(c.a(16) == 64);
  CHECK(c.a(11) == 0);
}

TEST_CASE("independent oracles for the coefficients") {
  auto eta = eta_product_5(300);
  Form f5 = build_form(named_form("5w4"), 300);
  for (long n = 1; n <= 300; ++n) CHECK(f5.a(n) == eta[n]);

  for (const char* id : {"5w4", "7w4", "5w6"}) {
    CAPTURE(id);
    FormSpec s = named_form(id);
    auto rat = combo_series_rational(std::get<EisensteinCombo>(s.source), 1000);
    Form f = build_form(s, 1000);
    bool same = rat[0] == 0;
    for (long n = 1; n <= 1000; ++n) same = same && rat[n] == f.a(n);
    CHECK(same);
  }

  const CMCurve& e = std::get<CMCurve>(named_form("121w4").source);
  Form c = build_form(named_form("121w4"), 400);
  Sieve sv(400);
  for (auto p : sv.primes) {
    if (p == 11) continue;
    long d = p + 1 - count_points(p);
    CHECK(cm_trace_naive(e, p) == d);
    CHECK(c.a(p) == d * d * d - 3 * static_cast<long>(p) * d);
  }
}

TEST_CASE("CM fast trace agrees with point counting") {
  const CMCurve& e = std::get<CMCurve>(named_form("121w4").source);
  int sign = 0;
  for (long p = 3; p < 200 && sign == 0; p += 2) {
    if (!is_prime(p) || p == 11 || legendre(-11, p) != 1) continue;
    long fast = cm_trace_fast(p, 11, 1);
    sign = cm_trace_naive(e, p) == fast ? 1 : -1;
  }
  REQUIRE(sign != 0);
  Sieve sv(2000);
  for (auto p : sv.primes) {
    if (p == 2 || p == 11) continue;
    CHECK(cm_trace_fast(p, 11, sign) == cm_trace_naive(e, p));
  }
  Form big = cm_coefficients(e, 4, 5000, 500);
  Form ref = cm_coefficients(e, 4, 5000, 5000);
  bool same = true;
  for (long n = 1; n <= 5000; ++n) same = same && big.a(n) == ref.a(n);
  CHECK(same);
}

TEST_CASE("Hecke relations and sigma coefficients") {
  for (const auto& id : named_form_ids()) {
    CAPTURE(id);
    Form f = build_form(named_form(id), 20000);
    auto h = props::hecke_multiplicativity(f, 1000, 17);
    CHECK_MESSAGE(h.ok, h.detail);
    CHECK(h.cases >= 1000);
    auto s = props::sigma_product_vs_sieve(f, 1000);
    CHECK_MESSAGE(s.ok, s.detail);
  }
}

TEST_CASE("twisted Dirichlet coefficients") {
  Form f = build_form(named_form("5w4"), 100);
  IntSeq bs = twisted_dirichlet_coeffs(f, ArtinRep::sigma(3), 50);
  CHECK(bs.get(1) == 1);
  CHECK(bs.get(2) == 0);
  IntSeq br = twisted_dirichlet_coeffs(f, ArtinRep::rho(3, 2), 50);
  CHECK(br.get(1) == 1);
  CHECK(br.get(2) == 0);
  IntSeq bt = twisted_dirichlet_coeffs(f, ArtinRep::trivial(), 50);
  for (long n = 1; n <= 50; ++n) CHECK(bt.get(n) == f.a(n));
}

TEST_CASE("descriptors, eigenform check and cache") {
  FormSpec s = parse_form_descriptor("level=5;weight=4;-250/3*E4(q^5)-10/3*E4(q)+13*E2s(q^5)*E2s(q^5)");
  Form f = build_form(s, 40);
  Form g = build_form(named_form("5w4"), 40);
  for (long n = 1; n <= 40; ++n) CHECK(f.a(n) == g.a(n));
  CHECK(parse_form_descriptor("7w4").level == 7);
  CHECK_THROWS(parse_form_descriptor("level=5;weight=4;E4(q^"));
  CHECK_THROWS_AS(build_form(parse_form_descriptor("level=5;weight=4;1/7*E4(q)"), 20), NotEigenform);

  auto dir = std::filesystem::temp_directory_path() / "lcong_cache_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  Form w = load_or_build(named_form("5w6"), 500, dir.string());
  std::string path = cache_path(dir.string(), named_form("5w6"));
  CHECK(std::filesystem::exists(path));
  auto back = read_cache(named_form("5w6"), 300, path);
  REQUIRE(back.has_value());
  for (long n = 1; n <= 300; ++n) CHECK(back->a(n) == w.a(n));
  CHECK_FALSE(read_cache(named_form("5w6"), 600, path).has_value());
  CHECK_FALSE(read_cache(named_form("5w4"), 100, path).has_value());
  std::filesystem::remove_all(dir);
}
