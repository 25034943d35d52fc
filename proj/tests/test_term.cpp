#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "slg/term.hpp"
#include "slg/ward.hpp"

using namespace slg;

TEST_CASE("parse and print") {
  auto t = parse_term("(* (* x z) (* y z))");
  CHECK(print_term(t) == "(* (* x z) (* y z))");
  CHECK(t->kind == Term::Kind::op);

  auto i = parse_term("(inv x)");
  CHECK(i->kind == Term::Kind::inv);
  CHECK(print_term(i) == "(inv x)");

  auto m = parse_term("(* (meet x y) y)");
  CHECK(m->left->kind == Term::Kind::meet_id);
  CHECK(print_term(m) == "(* (meet x y) y)");

  // atoms in the constant set parse as constants
  auto c = parse_term("(* x r)");
  CHECK(c->right->kind == Term::Kind::constant);
  auto v = parse_term("(* x q)");
  CHECK(v->right->kind == Term::Kind::var);
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_WITH_AS(parse_term("(* x"),
                       "syntax error at position 4: unexpected end of input",
                       InvalidInput);
  CHECK_THROWS_AS(parse_term(""), InvalidInput);
  CHECK_THROWS_AS(parse_term("(foo x y)"), InvalidInput);
  CHECK_THROWS_AS(parse_term("(* x y) z"), InvalidInput);
}

TEST_CASE("print then parse is the identity on the whole catalogue") {
  for (const Identity& id : identity_corpus()) {
    CHECK(print_term(parse_term(print_term(id.lhs))) == print_term(id.lhs));
    CHECK(print_term(parse_term(print_term(id.rhs))) == print_term(id.rhs));
  }
}

TEST_CASE("variable order is first appearance, lhs then rhs") {
  Identity id = parse_identity("t", "(* (* x z) (* y z)) = (* x y)");
  CHECK(id.variables == std::vector<std::string>{"x", "z", "y"});
}

TEST_CASE("eval_term") {
  CHECK(eval_term(*parse_term("(* x y)"), fix::t_z3(), {{"x", 1}, {"y", 2}}) ==
        0);

  InverseMap inv{{0, 2, 1, 3}};
  EvalContext ctx;
  ctx.inverses = &inv;
  CHECK(eval_term(*parse_term("(inv x)"), fix::t_rd4(), {{"x", 1}}, ctx) == 2);

  Decoration deco = fix::deco4();
  EvalContext dctx;
  dctx.decoration = &deco;
  CHECK(eval_term(*parse_term("(meet x y)"), fix::t_rd4(), {{"x", 1}, {"y", 3}},
                  dctx) == 3);
  CHECK(eval_term(*parse_term("(local x)"), fix::t_rd4(), {{"x", 1}}, dctx) ==
        0);

  CHECK_THROWS_AS(
      eval_term(*parse_term("(local x)"), fix::t_rd4(), {{"x", 1}}),
      EvalError);
  CHECK_THROWS_AS(
      eval_term(*parse_term("(inv x)"), fix::t_lp2(), {{"x", 1}}),
      EvalError);
  CHECK_THROWS_AS(
      eval_term(*parse_term("(* x e)"), fix::t_z3(), {{"x", 1}}),
      EvalError);
  CHECK_THROWS_AS(eval_term(*parse_term("(* x y)"), fix::t_z3(), {{"x", 1}}),
                  InvalidInput);
}

TEST_CASE("check_identity finds the least counterexample") {
  const Identity* one = find_identity("1");
  CHECK(check_identity(*one, fix::t_z3rd()).passed);

  CheckResult r = check_identity(*one, fix::t_z3());
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness.has_value());
  // least in (x, z, y) scan order; as named values x=0, y=0, z=1
  CHECK(r.witness->assignment ==
        std::vector<std::pair<std::string, int>>{{"x", 0}, {"z", 1}, {"y", 0}});
  CHECK(r.witness->lhs == 2);
  CHECK(r.witness->rhs == 0);
}

TEST_CASE("check_identity with decoration") {
  Decoration deco = fix::deco4();
  EvalContext ctx;
  ctx.decoration = &deco;
  CHECK(check_identity(*find_identity("3.24"), fix::t_rd4(), ctx).passed);
  CHECK(check_identity(*find_identity("3.25"), fix::t_rd4(), ctx).passed);
  CHECK(check_identity(*find_identity("3.26"), fix::t_rd4(), ctx).passed);
  CHECK_FALSE(check_identity(*find_identity("3.24"), fix::t_ld4(), ctx).passed);
  CHECK(check_identity(*find_identity("3.84"), fix::t_ld4(), ctx).passed);
  CHECK(check_identity(*find_identity("3.133"), fix::t_dd4(), ctx).passed);
  CHECK(check_identity(*find_identity("3.134"), fix::t_dd4(), ctx).passed);
  CHECK_THROWS_AS(check_identity(*find_identity("3.24"), fix::t_z3()),
                  EvalError);
}

TEST_CASE("exists_binding") {
  const Identity* thirteen = find_identity("13");
  CHECK(exists_binding(*thirteen, fix::t_z3dd(), "e") == 0);
  CHECK_FALSE(exists_binding(*thirteen, fix::t_z3rd(), "e").has_value());
  CHECK(exists_binding(*thirteen, Groupoid(Table{{0}}), "e") == 0);
  CHECK_THROWS_AS(exists_binding(*find_identity("1"), fix::t_z3(), "e"),
                  InvalidInput);
}

TEST_CASE("meet nesting order is immaterial") {
  Decoration deco = fix::deco4();
  EvalContext ctx;
  ctx.decoration = &deco;
  auto a = parse_term("(meet (meet x y) z)");
  auto b = parse_term("(meet x (meet y z))");
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int z = 0; z < 4; ++z) {
        std::map<std::string, int> asg{{"x", x}, {"y", y}, {"z", z}};
        CHECK(eval_term(*a, fix::t_rd4(), asg, ctx) ==
              eval_term(*b, fix::t_rd4(), asg, ctx));
      }
}

TEST_CASE("engine matches the hand-coded ward recognizer on identity 1") {
  const Identity* one = find_identity("1");
  for (const Groupoid& g : {fix::t_z3rd(), fix::t_z3(), fix::t_z2(),
                            fix::t_z3dd(), dual(fix::t_z3rd())}) {
    bool engine = check_identity(*one, g).passed;
    bool hand = is_quasigroup(g) && is_ward(g).has_value();
    if (is_quasigroup(g))
      CHECK(engine == hand);
    else
      CHECK_FALSE(hand);
  }
}

TEST_CASE("law 16 holds on the double-Ward fixtures") {
  for (const Groupoid& g : {fix::t_z3dd(), fix::t_z2()}) {
    CHECK(check_identity(*find_identity("16a"), g).passed);
    CHECK(check_identity(*find_identity("16b"), g).passed);
  }
}

TEST_CASE("bundled catalogue file matches the embedded copy") {
  std::ifstream in(std::string(SLG_DATA_DIR) + "/identities.txt");
  REQUIRE(in.good());
  std::vector<Identity> from_file = parse_identity_file(in);
  const auto& embedded = identity_corpus();
  REQUIRE(from_file.size() == embedded.size());
  for (size_t i = 0; i < embedded.size(); ++i) {
    CHECK(from_file[i].name == embedded[i].name);
    CHECK(print_term(from_file[i].lhs) == print_term(embedded[i].lhs));
    CHECK(print_term(from_file[i].rhs) == print_term(embedded[i].rhs));
  }
  CHECK(find_identity("3.133") != nullptr);
  CHECK(find_identity("result14-idem") != nullptr);
  CHECK(find_identity("nope") == nullptr);
}

TEST_CASE("identity file parse errors") {
  std::istringstream bad("1 (* x y) = x\n");
  CHECK_THROWS_AS(parse_identity_file(bad), InvalidInput);
  std::istringstream two("a: x = y = z\n");
  CHECK_THROWS_AS(parse_identity_file(two), InvalidInput);
  std::istringstream comments("# note\n\n16a: (* (* y x) y) = x\n");
  CHECK(parse_identity_file(comments).size() == 1);
}
