#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "slg/enumerate.hpp"
#include "slg/ward.hpp"

using namespace slg;

TEST_CASE("is_ward") {
  auto w = is_ward(fix::t_z3rd());
  REQUIRE(w.has_value());
  CHECK(w->r == 0);

  auto w2 = is_ward(fix::t_z2());  // xor is right division in Z2
  REQUIRE(w2.has_value());
  CHECK(w2->r == 0);

  CHECK_FALSE(is_ward(fix::t_z3()).has_value());
  CHECK_FALSE(is_ward(fix::t_lp2()).has_value());
}

TEST_CASE("is_ward_dual") {
  auto w = is_ward_dual(dual(fix::t_z3rd()));
  REQUIRE(w.has_value());
  CHECK(w->r == 0);
  CHECK(is_ward_dual(fix::t_z2()).has_value());
  CHECK_FALSE(is_ward_dual(fix::t_lp2()).has_value());
  // subtraction has a right identity but no left identity
  CHECK_FALSE(is_ward_dual(fix::t_z3rd()).has_value());
}

TEST_CASE("is_double_ward") {
  auto w = is_double_ward(fix::t_z3dd());
  REQUIRE(w.has_value());
  CHECK(w->r == 0);
  // -2e = e holds for every e mod 3, so every e is admissible here
  CHECK(w->admissible == std::vector<int>{0, 1, 2});

  auto w2 = is_double_ward(fix::t_z2());
  REQUIRE(w2.has_value());
  CHECK(w2->r == 0);
  CHECK(w2->admissible == std::vector<int>{0});

  CHECK_FALSE(is_double_ward(fix::t_z3rd()).has_value());
  CHECK_FALSE(is_double_ward(fix::t_lp2()).has_value());
}

TEST_CASE("constructions from a group") {
  CHECK(ward_from_group(fix::t_z3()) == fix::t_z3rd());
  CHECK(ward_from_group(fix::t_z2()) == fix::t_z2());
  CHECK(ward_from_group(Groupoid(Table{{0}})) == Groupoid(Table{{0}}));

  CHECK(ward_dual_from_group(fix::t_z3()) == dual(fix::t_z3rd()));
  CHECK(ward_dual_from_group(fix::t_z2()) == fix::t_z2());

  CHECK(double_ward_from_group(fix::t_z3()) == fix::t_z3dd());
  CHECK(double_ward_from_group(fix::t_z2()) == fix::t_z2());

  CHECK_THROWS_AS(ward_from_group(fix::t_lp2()), NotAGroup);
  CHECK_THROWS_AS(double_ward_from_group(fix::t_z3rd()), NotAGroup);
}

TEST_CASE("groups from quasigroups") {
  CHECK(group_from_ward(*is_ward(fix::t_z3rd())) == fix::t_z3());
  CHECK(group_from_ward(*is_ward(fix::t_z2())) == fix::t_z2());

  CHECK(group_from_ward_dual(*is_ward_dual(dual(fix::t_z3rd()))) ==
        fix::t_z3());
  CHECK(group_from_double_ward(*is_double_ward(fix::t_z3dd()), 0) ==
        fix::t_z3());
  // a different admissible e recovers an isomorphic group at that identity
  Groupoid g1 = group_from_double_ward(*is_double_ward(fix::t_z3dd()), 1);
  CHECK(group_identity(g1) == 1);
  CHECK(find_isomorphism(g1, fix::t_z3()).has_value());

  WardStructure bad = *is_ward(fix::t_z3rd());
  bad.r = 1;
  CHECK_THROWS_AS(group_from_ward(bad), MathError);
  WardStructure wrong_kind = *is_ward(fix::t_z3rd());
  wrong_kind.kind = WardKind::double_ward;
  CHECK_THROWS_AS(group_from_double_ward(wrong_kind), MathError);
}

TEST_CASE("ward and double ward conversions") {
  CHECK(ward_to_double_ward(*is_ward(fix::t_z3rd())) == fix::t_z3dd());
  CHECK(ward_to_double_ward(*is_ward(fix::t_z2())) == fix::t_z2());
  CHECK(double_ward_to_ward(*is_double_ward(fix::t_z3dd()), 0) ==
        fix::t_z3rd());
  CHECK(double_ward_to_ward(*is_double_ward(fix::t_z2())) == fix::t_z2());
  CHECK(ward_to_double_ward(*is_ward(Groupoid(Table{{0}}))) == Groupoid(Table{{0}}));
}

TEST_CASE("round trips over all groups of order <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& item : slg::enumerate_groups(n).items) {
      const Groupoid& g = item.item.groupoid;
      Groupoid w = ward_from_group(g);
      CHECK(group_from_ward(*is_ward(w)) == g);
      CHECK(ward_from_group(group_from_ward(*is_ward(w))) == w);

      Groupoid wd = ward_dual_from_group(g);
      CHECK(group_from_ward_dual(*is_ward_dual(wd)) == g);

      Groupoid dw = double_ward_from_group(g);
      const int e = group_identity(g);
      CHECK(group_from_double_ward(*is_double_ward(dw), e) == g);

      // results 10 and 11 are mutually inverse and match double division
      Groupoid via10 = ward_to_double_ward(*is_ward(w));
      CHECK(via10 == dw);
      CHECK(double_ward_to_ward(*is_double_ward(via10), e) == w);
    }
  }
}

TEST_CASE("is_medial") {
  CHECK(is_medial(fix::t_z3rd()));
  CHECK(is_medial(fix::t_z2()));
  CHECK_FALSE(is_medial(ward_from_group(fix::s3())));
}

TEST_CASE("mediality tracks commutativity of the inducing group") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& item : slg::enumerate_groups(n).items) {
      const Groupoid& g = item.item.groupoid;
      CHECK(is_medial(ward_from_group(g)) == is_abelian_group(g));
      CHECK(is_medial(ward_dual_from_group(g)) == is_abelian_group(g));
    }
}

TEST_CASE("ward duality carries r across the transpose") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& item : slg::enumerate_groups(n).items) {
      Groupoid w = ward_from_group(item.item.groupoid);
      auto ws = is_ward(w);
      REQUIRE(ws.has_value());
      auto wd = is_ward_dual(dual(w));
      REQUIRE(wd.has_value());
      CHECK(wd->r == ws->r);
    }
}
