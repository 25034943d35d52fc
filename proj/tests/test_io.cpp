#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"
#include "slg/io.hpp"

using namespace slg;

TEST_CASE("table json round trip") {
  for (const Groupoid& g : {fix::t_z3(), fix::t_slg4(), Groupoid(Table{{0}})}) {
    Json j = table_to_json(g);
    CHECK(table_from_json(j) == g);
  }
  Groupoid labeled({{0, 1}, {1, 0}}, {"e", "g"});
  Json j = table_to_json(labeled);
  CHECK(table_from_json(j).labels() == labeled.labels());
}

TEST_CASE("decorated json round trip") {
  Json j = decorated_to_json(fix::d_rd4());
  DecoratedGroupoid back = decorated_from_json(j);
  CHECK(back.groupoid == fix::t_rd4());
  CHECK(back.decoration.class_of == fix::deco4().class_of);
  CHECK(back.decoration.e_of_class == fix::deco4().e_of_class);
  CHECK(back.decoration.class_table == fix::deco4().class_table);

  CHECK_FALSE(decoration_from_json(table_to_json(fix::t_z3())).has_value());
  CHECK_THROWS_AS(decorated_from_json(table_to_json(fix::t_z3())), EvalError);
}

TEST_CASE("spec json round trip") {
  StrongSemilatticeSpec s;
  s.semilattice = Groupoid({{0, 1}, {1, 1}});
  s.groups = {fix::t_z3(), Groupoid(Table{{0}})};
  s.homs[{0, 1}] = {0, 0, 0};
  Json j = spec_to_json(s);
  StrongSemilatticeSpec back = spec_from_json(j);
  CHECK(back.semilattice == s.semilattice);
  CHECK(back.groups.size() == 2);
  CHECK(back.groups[0] == fix::t_z3());
  CHECK(back.homs.at({0, 1}) == std::vector<int>{0, 0, 0});
}

TEST_CASE("malformed inputs") {
  CHECK_THROWS_AS(table_from_json(Json::parse(R"({"table": [[0]]})")),
                  InvalidInput);
  CHECK_THROWS_AS(
      table_from_json(Json::parse(R"({"n": 2, "table": [[0,1]]})")),
      InvalidInput);
  CHECK_THROWS_AS(
      table_from_json(Json::parse(R"({"n": 2, "table": [[0,2],[1,0]]})")),
      InvalidInput);
  CHECK_THROWS_AS(
      table_from_json(Json::parse(
          R"({"n": 2, "table": [[0,1],[1,0]], "labels": ["a"]})")),
      InvalidInput);
  CHECK_THROWS_AS(table_from_json(Json::parse("[1,2,3]")), InvalidInput);
  CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), InvalidInput);
}

TEST_CASE("digest is deterministic and content-sensitive") {
  Json a = table_to_json(fix::t_z3());
  Json b = table_to_json(fix::t_z3());
  CHECK(digest(a) == digest(b));
  CHECK(digest(a) != digest(table_to_json(fix::t_z3rd())));
  CHECK(digest(a).size() == 16);
}

TEST_CASE("report json has fixed key order") {
  Report rep("demo");
  rep.add(CheckResult::pass("a", "fine"));
  Witness w;
  w.check = "law";
  w.assignment = {{"x", 0}, {"y", 1}};
  w.lhs = 2;
  w.rhs = 0;
  rep.add(CheckResult::fail("b", w));
  Json j = report_to_json(rep);
  CHECK(j.dump().find("\"title\"") < j.dump().find("\"passed\""));
  CHECK(j["checks"][1]["witness"]["assignment"].dump() == R"({"x":0,"y":1})");
  CHECK_FALSE(j["passed"].get<bool>());
}
