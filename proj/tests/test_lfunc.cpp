#include "doctest.h"
#include "lcong/lfunc.hpp"
#include "properties.hpp"

using namespace lcong;

namespace {

Form form_for(const std::string& id, const std::vector<ArtinRep>& reps, int digits) {
  FormSpec s = named_form(id);
  Form small = build_form(s, 100);
  long need = 1000;
  for (const auto& r : reps) need = std::max(need, coefficient_demand(small, r, digits, 1.2));
  return build_form(s, need);
}

TwistedLData solved(const Form& f, const ArtinRep& rep, int digits) {
  TwistedLData d = make_ldata(f, rep, f.n_max());
  if (d.w == 0) d.w = solve_root_number(d, digits).w;
  return d;
}

// L(s) = Λ(s) / (B^s Γ(s)^d)
Real l_from_lambda(const TwistedLData& d, const Real& s, int digits) {
  const mpfr_prec_t P = digits_to_bits(digits) + 32;
  Real lam = lambda_split(d, s, Real(1.0, P), digits);
  Real B = scale_B(d, P), Bs(P), g = gamma(s);
  mpfr_pow(Bs.get(), B.get(), s.get(), MPFR_RNDN);
  return lam / (Bs * pow_si(g, d.d));
}

}  // namespace

TEST_CASE("local Euler factors of f") {
  Form f5 = build_form(named_form("5w4"), 50);
  Form fc = build_form(named_form("121w4"), 50);
  CHECK(poly_equal(euler_factor_f(f5, 2), Poly{1, 4, 8}));
  CHECK(poly_equal(euler_factor_f(f5, 5), Poly{1, 5}));
  CHECK(poly_equal(euler_factor_f(fc, 11), Poly{1}));
  CHECK(frobenius_trace_bv(f5, 2, 1) == -4);
  CHECK(frobenius_trace_bv(f5, 2, 2) == 0);
  CHECK(frobenius_trace_bv(f5, 7, 0) == 2);
  CHECK(frobenius_trace_bv(f5, 3, 3) == 2 * 2 * 2 - 3 * 27 * 2);
  CHECK_THROWS(frobenius_trace_bv(f5, 5, 1));
  CHECK(poly_equal(twisted_euler_factor(f5, ArtinRep::sigma(3), 2), Poly{1, 0, 0, 0, 64}));
  CHECK(poly_equal(twisted_euler_factor(f5, ArtinRep::rho(3, 2), 2), Poly{1}));
  CHECK(poly_equal(twisted_euler_factor(f5, ArtinRep::rho(3, 2), 3), Poly{1}));
  CHECK(poly_equal(twisted_euler_factor(f5, ArtinRep::sigma(3), 3), euler_factor_f(f5, 3)));
}

TEST_CASE("twisted conductors") {
  Form f5 = build_form(named_form("5w4"), 50);
  Form fc = build_form(named_form("121w4"), 50);
  CHECK(conductor_twisted(f5, ArtinRep::rho(3, 2)) == parse_factored("2^4*3^6*5^2"));
  CHECK(conductor_twisted(f5, ArtinRep::rho(3, 17)) == parse_factored("3^2*5^2*17^4"));
  CHECK(conductor_twisted(fc, ArtinRep::rho(3, 2)) == parse_factored("2^4*3^6*11^4"));
  CHECK(conductor_twisted(f5, ArtinRep::sigma(3)) == 9 * 25);
  CHECK_THROWS_AS(conductor_twisted(fc, ArtinRep::rho(3, 11), false), H2Violation);
  CHECK(conductor_twisted(fc, ArtinRep::rho(3, 11), true) > 0);
}

TEST_CASE("rational reconstruction") {
  const mpfr_prec_t P = 200;
  Real x(mpq_class(-31, 1125), P);
  Real err(1e-45, P);
  auto r = reconstruct_rational(x, err);
  REQUIRE(r.has_value());
  CHECK(*r == mpq_class(-31, 1125));
  Real pi_ = pi(P);
  CHECK_FALSE(reconstruct_rational(pi_, Real(1e-30, P)).has_value());
}

TEST_CASE("sigma header values at 40 digits") {
  struct H {
    const char* id;
    int n;
    const char* v;
  };
  for (H h : {H{"5w4", 1, "-100"}, H{"5w4", 2, "13/3"}, H{"7w4", 1, "49"}, H{"7w4", 2, "0"}, H{"5w6", 1, "-400"},
              H{"5w6", 2, "62/15"}, H{"5w6", 3, "-31/1125"}, H{"121w4", 1, "176"}}) {
    INFO(h.id);
    CAPTURE(h.n);
    Form f = form_for(h.id, {ArtinRep::sigma(3), ArtinRep::trivial()}, 50);
    CriticalValue v = lstar(f, ArtinRep::sigma(3), h.n, 40);
    REQUIRE(v.exact.has_value());
    CHECK(*v.exact == parse_factored(h.v));
  }
}

TEST_CASE("root numbers solved from the functional equation") {
  struct R {
    const char* id;
    ArtinRep rep;
    int w;
  };
  for (const R& r : {R{"5w4", ArtinRep::sigma(3), 1}, R{"7w4", ArtinRep::sigma(3), -1},
                     R{"5w4", ArtinRep::rho(3, 5), -1}, R{"5w4", ArtinRep::rho(3, 2), 1}}) {
    INFO(r.id);
    CAPTURE(r.rep.name());
    Form f = form_for(r.id, {r.rep}, 24);
    TwistedLData d = make_ldata(f, r.rep, f.n_max());
    RootNumberSolve s = solve_root_number(d, 20);
    CHECK(s.w == r.w);
    CHECK(std::fabs(s.raw - r.w) < 1e-10);
    CHECK(global_root_number(f, r.rep) == r.w);
  }
}

TEST_CASE("central vanishing and sign pattern") {
  Form f5 = form_for("5w4", {ArtinRep::rho(3, 5), ArtinRep::rho(3, 2), ArtinRep::sigma(3)}, 40);
  Form f7 = form_for("7w4", {ArtinRep::sigma(3)}, 40);
  CHECK(central_vanishing(f7, ArtinRep::sigma(3), 30));
  CHECK_FALSE(central_vanishing(f5, ArtinRep::sigma(3), 30));
  CHECK(central_vanishing(f5, ArtinRep::rho(3, 5), 30));
  for (long m : {2L, 5L}) {
    ArtinRep r = ArtinRep::rho(3, m);
    CriticalValue v = lstar(f5, r, 1, 30);
    REQUIRE(v.exact.has_value());
    CHECK(sgn(*v.exact) == -global_root_number(f5, r));
  }
  Form f6 = form_for("5w6", {ArtinRep::rho(3, 2)}, 40);
  for (int n : {1, 2}) {
    CriticalValue v = lstar(f6, ArtinRep::rho(3, 2), n, 30);
    REQUIRE(v.exact.has_value());
    CHECK(sgn(*v.exact) == (n % 2 ? -1 : 1) * global_root_number(f6, ArtinRep::rho(3, 2)));
  }
}

TEST_CASE("reconstruction is stable under higher precision") {
  Form f = form_for("5w4", {ArtinRep::rho(3, 2), ArtinRep::trivial()}, 70);
  for (int n = 1; n <= 3; ++n) {
    CriticalValue a = lstar(f, ArtinRep::rho(3, 2), n, 40);
    CriticalValue b = lstar(f, ArtinRep::rho(3, 2), n, 60);
    REQUIRE(a.exact.has_value());
    REQUIRE(b.exact.has_value());
    CHECK(*a.exact == *b.exact);
  }
  CHECK(*lstar(f, ArtinRep::rho(3, 2), 1, 40).exact == parse_factored("-2^5*5^3*7*13"));
}

TEST_CASE("periods") {
  for (const auto& id : named_form_ids()) {
    CAPTURE(id);
    Form f = form_for(id, {ArtinRep::trivial()}, 40);
    Periods p = periods(f, 30);
    CHECK(p.w == 1);
    CHECK(p.omega_plus.sign() > 0);
    CHECK(p.omega_minus_im.sign() > 0);
  }
}

TEST_CASE("degree-one functional equations off the critical points") {
  for (const auto& id : named_form_ids()) {
    for (const ArtinRep& rep : {ArtinRep::trivial(), ArtinRep::chi_minus3()}) {
      CAPTURE(id);
      CAPTURE(rep.name());
      const int digits = 30;
      Form f = form_for(id, {rep}, digits + 5);
      TwistedLData d = solved(f, rep, 20);
      const mpfr_prec_t P = digits_to_bits(digits) + 32;
      for (double s : {0.37, 1.71, 2.93}) {
        Real ss(s, P);
        Real res = functional_equation_residual(d, ss, digits);
        Real lam = abs(lambda_split(d, ss, Real(1.0, P), digits));
        CHECK(res.to_double() < 1e-25 * std::max(1.0, lam.to_double()));
      }
    }
  }
}

TEST_CASE("Dirichlet series agree with the partial Euler product region") {
  for (const auto& id : named_form_ids()) {
    CAPTURE(id);
    Form f = build_form(named_form(id), 1'000'000);
    TwistedLData d = solved(f, ArtinRep::trivial(), 20);
    const int s = f.weight / 2 + 2;
    Real L = l_from_lambda(d, Real(static_cast<double>(s), 128), 25);
    long double partial = 0;
    for (long n = f.n_max(); n >= 1; --n) partial += f.a(n).get_d() / std::pow(static_cast<long double>(n), s);
    CHECK(std::fabs(partial / L.to_ld() - 1) < 1e-6L);
  }
}

TEST_CASE("sigma factors as the form times its quadratic twist") {
  const int digits = 18;
  Form f = form_for("5w4", {ArtinRep::sigma(3), ArtinRep::chi_minus3()}, digits + 5);
  TwistedLData ds = make_ldata(f, ArtinRep::sigma(3), f.n_max());
  TwistedLData dt = solved(f, ArtinRep::trivial(), 20);
  TwistedLData dc = solved(f, ArtinRep::chi_minus3(), 20);
  const mpfr_prec_t P = digits_to_bits(digits) + 32;
  Real s(3.0, P);
  Real ls = l_from_lambda(ds, s, digits);
  Real prod = l_from_lambda(dt, s, digits) * l_from_lambda(dc, s, digits);
  CHECK(abs((ls - prod) / prod).to_double() < 1e-15);
}
