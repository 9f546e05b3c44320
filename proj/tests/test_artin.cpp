#include "doctest.h"
#include "lcong/artin.hpp"
#include "lcong/lfunc.hpp"
#include "properties.hpp"

using namespace lcong;

TEST_CASE("Frobenius classes") {
  ArtinRep r = ArtinRep::rho(3, 2);
  CHECK(frobenius_class(r, 7).kind == FrobKind::PCycle);
  CHECK(frobenius_class(r, 5).kind == FrobKind::Reflection);
  CHECK(frobenius_class(r, 5).order == 2);
  CHECK(frobenius_class(r, 31).kind == FrobKind::Identity);
  CHECK_THROWS(frobenius_class(r, 2));
  CHECK_THROWS(frobenius_class(r, 3));
  // cubes mod q by enumeration
  Sieve sv(500);
  for (auto q : sv.primes) {
    if (q % 3 != 1) continue;
    bool cube = false;
    for (long x = 1; x < q; ++x) cube = cube || (x * x % q) * x % q == 2;
    CHECK(is_pth_power_mod(2, 3, q) == cube);
  }
}

TEST_CASE("Artin local factors") {
  CHECK(poly_equal(artin_local_factor(ArtinRep::rho(3, 2), 5), Poly{1, 0, -1}));
  CHECK(poly_equal(artin_local_factor(ArtinRep::rho(3, 2), 3), Poly{1}));
  CHECK(poly_equal(artin_local_factor(ArtinRep::rho(3, 17), 3), Poly{1, -1}));
  CHECK(poly_equal(artin_local_factor(ArtinRep::rho(3, 10), 2), Poly{1}));
  CHECK(poly_equal(artin_local_factor(ArtinRep::sigma(3), 3), Poly{1, -1}));
  CHECK(poly_equal(artin_local_factor(ArtinRep::sigma(3), 5), Poly{1, 0, -1}));
  CHECK(poly_equal(artin_local_factor(ArtinRep::sigma(3), 7), Poly{1, -2, 1}));
  Sieve sv(10000);
  bool ok = true;
  for (auto q : sv.primes) {
    if (q == 2 || q == 3) continue;
    Poly f = artin_local_factor(ArtinRep::rho(3, 2), q);
    ok = ok && f.size() == 3 && f[2] == legendre(q, 3);
  }
  CHECK(ok);
}

TEST_CASE("conductors and epsilon factors") {
  CHECK(conductor(ArtinRep::sigma(3)) == 3);
  CHECK(conductor(ArtinRep::rho(3, 2)) == 108);
  CHECK(conductor(ArtinRep::rho(3, 17)) == 17 * 17 * 3);
  CHECK(conductor(ArtinRep::rho(3, 6)) == 4 * 243);
  CHECK(epsilon_p(ArtinRep::sigma(3)) == HalfPower{3, 1, 2});
  CHECK(epsilon_p(ArtinRep::rho(3, 6)) == HalfPower{3, 5, 2});
  CHECK(epsilon_p(ArtinRep::rho(3, 19)) == HalfPower{3, 1, 2});
  CHECK(epsilon_p(ArtinRep::rho(3, 2)) == HalfPower{3, 3, 2});
  CHECK(epsilon_stated(ArtinRep::sigma(3)) == HalfPower{3, 1, 2});
  CHECK(epsilon_stated(ArtinRep::rho(3, 6)) == HalfPower{3, 5, 1});
  CHECK(epsilon_stated(ArtinRep::rho(3, 19)) == HalfPower{3, 1, 1});
  CHECK(epsilon_stated(ArtinRep::rho(3, 17)) == HalfPower{3, 1, 1});
  CHECK(epsilon_stated(ArtinRep::rho(3, 2)) == HalfPower{3, 3, 1});
  CHECK(d_plus_minus(ArtinRep::sigma(3), 1) == std::pair{1, 1});
  CHECK(d_plus_minus(ArtinRep::rho(3, 5), 2) == std::pair{1, 1});
  CHECK(d_plus_minus(ArtinRep::trivial(), 2) == std::pair{1, 0});
  for (long m : {2L, 6L, 17L}) {
    ArtinRep r = ArtinRep::rho(3, m);
    ArtinRep d = dual(r);
    CHECK(conductor(d) == conductor(r));
    CHECK(epsilon_p(d) == epsilon_p(r));
    for (long q : {2L, 5L, 7L, 13L}) CHECK(poly_equal(artin_local_factor(d, q), artin_local_factor(r, q)));
  }
}

TEST_CASE("root numbers") {
  Form f5 = build_form(named_form("5w4"), 100);
  Form f7 = build_form(named_form("7w4"), 100);
  Form f6 = build_form(named_form("5w6"), 100);
  Form fc = build_form(named_form("121w4"), 100);
  CHECK(local_root_number(f5, ArtinRep::rho(3, 2), 5).sign == -1);
  CHECK(local_root_number(f5, ArtinRep::rho(3, 2), 7).sign == 1);
  CHECK(local_root_number(f7, ArtinRep::rho(3, 2), 7).sign == 1);
  CHECK(global_root_number(f5, ArtinRep::sigma(3)) == 1);
  CHECK(global_root_number(f7, ArtinRep::sigma(3)) == -1);
  CHECK(global_root_number(fc, ArtinRep::sigma(3)) == -1);
  for (long m = 2; m <= 60; ++m) {
    bool cube_free = true;
    for (long d = 2; d * d * d <= m; ++d) cube_free = cube_free && m % (d * d * d) != 0;
    if (!cube_free) continue;
    CAPTURE(m);
    CHECK(global_root_number(f5, ArtinRep::rho(3, m)) == (m % 5 == 0 ? -1 : 1));
    CHECK(global_root_number(f7, ArtinRep::rho(3, m)) == -1);
    for (const Form* f : {&f5, &f7, &f6}) {
      ArtinRep r = ArtinRep::rho(3, m);
      CHECK(global_root_number(*f, r) == global_root_number_from_local(*f, r));
    }
  }
  CHECK(violates_h2(fc, ArtinRep::rho(3, 11)));
  CHECK_FALSE(violates_h2(fc, ArtinRep::rho(3, 2)));
}

TEST_CASE("Euler factors against brute-force oracles") {
  for (const auto& id : named_form_ids()) {
    CAPTURE(id);
    Form f = build_form(named_form(id), 400);
    auto c = props::euler_factor_oracles(f, 200, {2, 5, 6, 7, 10, 17, 19});
    CHECK_MESSAGE(c.ok, c.detail);
  }
}
