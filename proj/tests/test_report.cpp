#include "doctest.h"
#include "lcong/report.hpp"
#include "lcong/tables.hpp"

using namespace lcong;

TEST_CASE("p-adic JSON round trip") {
  for (const PadicNumber& x : {PadicNumber::from_rational(mpq_class(50, 3), 3, 8), PadicNumber::exact_zero(3),
                               PadicNumber::zero_mod(3, 3), PadicNumber::from_rational(-162, 3, 5)}) {
    PadicNumber y = padic_from_json(nlohmann::json::parse(padic_json(x).dump()));
    CHECK(y.expansion(12) == x.expansion(12));
    CHECK(y.is_exact_zero() == x.is_exact_zero());
  }
}

TEST_CASE("row report round trip") {
  RunOptions opt;
  opt.digits = 30;
  Session s(opt);
  for (auto [id, m] : {std::pair<const char*, long>{"7w4", 2}, {"5w4", 5}}) {
    const std::string form = id;
    CAPTURE(form);
    auto rows = compute_rows(s, id, m, {1, 2, 3});
    for (const auto& r : rows) {
      auto fx = compare_with_fixture(r);
      CHECK(fx.has_fixture == (r.n <= table_max_n(form)));
      CHECK(fx.ok());
      auto j = nlohmann::json::parse(row_json(r, fx).dump());
      CongruenceReport back = congruence_from_json(j);
      CHECK(back.mod_p == r.congruence.mod_p);
      CHECK(back.mod_p2 == r.congruence.mod_p2);
      CHECK(back.residue_sigma == r.congruence.residue_sigma);
      CHECK(back.residue_rho == r.congruence.residue_rho);
      CHECK(back.central_vanishing == r.congruence.central_vanishing);
      CHECK(j["m"] == m);
      auto tsv = row_tsv(r, fx);
      const std::string head = row_tsv_header();
      CHECK(std::count(tsv.begin(), tsv.end(), '\t') == std::count(head.begin(), head.end(), '\t'));
    }
  }
}

TEST_CASE("budget refusal") {
  RunOptions opt;
  opt.budget = 1000;
  Session s(opt);
  CHECK_THROWS_AS(compute_rows(s, "5w4", 2, {1}), ResourceRefusal);
  auto ms = feasible_m(named_form("5w4"), 3, 12, RunOptions{});
  CHECK(std::find(ms.begin(), ms.end(), 2) != ms.end());
  CHECK(row_demand(named_form("5w4"), 3, 2, RunOptions{}) > 1000);
}
