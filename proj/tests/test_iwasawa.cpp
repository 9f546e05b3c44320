#include "doctest.h"
#include "lcong/iwasawa.hpp"
#include "properties.hpp"

using namespace lcong;

TEST_CASE("place classification") {
  Form f5 = build_form(named_form("5w4"), 100);
  Form f7 = build_form(named_form("7w4"), 100);
  auto c2 = classify_place(f5, 3, 2, 2);
  CHECK(c2.membership == Membership::None);
  CHECK(c2.b_v == 0);
  CHECK(c2.r_q == 2);
  auto c5 = classify_place(f5, 3, 5, 5);
  CHECK(c5.membership == Membership::P1);
  CHECK(c5.b_v == 25);
  CHECK(classify_place(f7, 3, 2, 2).membership == Membership::None);
  CHECK_THROWS(classify_place(f5, 3, 3, 6));
  CHECK_THROWS(classify_place(f5, 3, 7, 10));
  CHECK(place_count(3, 17) == 3);
  CHECK(place_count(3, 2) == 1);
  CHECK(place_count(3, 19) == 6);
  CHECK(place_count(3, 53) == 9);
  CHECK(to_string(Membership::P2) == "P2");
}

TEST_CASE("membership agrees with the sigma Euler factor") {
  Form f5 = build_form(named_form("5w4"), 100);
  Form f7 = build_form(named_form("7w4"), 100);
  CHECK(euler_divisibility_crosscheck(f5, 3, 5, 1, 3));
  CHECK(euler_divisibility_crosscheck(f5, 3, 2, 1, 3));
  CHECK(euler_divisibility_crosscheck(f7, 3, 2, 1, 3));
}

TEST_CASE("b_v congruence and n-independence for q < 200") {
  for (const auto& id : named_form_ids()) {
    CAPTURE(id);
    Form f = build_form(named_form(id), 400);
    auto c = props::eq44_and_membership(f, 3, 200);
    CHECK_MESSAGE(c.ok, c.detail);
  }
}

TEST_CASE("place counts and lambda transition") {
  auto c = props::place_count_oracle(3, 200);
  CHECK_MESSAGE(c.ok, c.detail);
  auto l = props::lambda_trivial_cases();
  CHECK_MESSAGE(l.ok, l.detail);
}
