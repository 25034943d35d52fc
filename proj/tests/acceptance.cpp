// Acceptance suite: runs the ten top-level checks at their stated
// tolerances (exact equality throughout) and prints one pass/fail line per
// criterion. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "slg/division.hpp"
#include "slg/enumerate.hpp"
#include "slg/term.hpp"
#include "slg/ward.hpp"

using namespace slg;

namespace {

void req(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

int iso_count(const std::vector<Table>& tables) {
  std::vector<Groupoid> reps;
  for (const Table& t : tables) {
    Groupoid g(t);
    bool fresh = true;
    for (const Groupoid& r : reps)
      if (find_isomorphism(g, r)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(g);
  }
  return static_cast<int>(reps.size());
}

const std::vector<DivisionKind> kKinds = {
    DivisionKind::right, DivisionKind::left, DivisionKind::double_division};

// ---------------------------------------------------------------- 1
void criterion_1() {
  const std::vector<int> expected = {1, 1, 1, 2, 1, 2, 1, 5};
  struct Plan {
    Groupoid (*make)(const Groupoid&);
    std::vector<const char*> laws;
    const char* constant;
  };
  const std::vector<Plan> plans = {
      {&ward_from_group, {"1", "2", "3", "4", "5", "6"}, "r"},
      {&ward_dual_from_group, {"7", "8", "9", "10", "11", "12"}, "r"},
      {&double_ward_from_group,
       {"13", "14", "15", "16a", "16b", "17", "18a", "18b", "19"},
       "e"},
  };
  for (int n = 1; n <= 8; ++n) {
    Corpus c = enumerate_groups(n);
    req(c.size() == expected[n - 1],
        "group count at order " + std::to_string(n) + " is " +
            std::to_string(c.size()));
    for (const auto& item : c.items) {
      const Groupoid& g = item.item.groupoid;
      const int e = group_identity(g);
      for (const auto& plan : plans) {
        Groupoid q = plan.make(g);
        EvalContext ctx;
        ctx.constants[plan.constant] = e;
        for (const char* law : plan.laws)
          req(check_identity(*find_identity(law), q, ctx).passed,
              std::string("law ") + law + " fails at order " +
                  std::to_string(n));
      }
      Groupoid w = ward_from_group(g);
      req(group_from_ward(*is_ward(w)) == g, "result 1+4 round trip");
      req(ward_from_group(group_from_ward(*is_ward(w))) == w,
          "result 4+1 round trip");
      Groupoid wd = ward_dual_from_group(g);
      req(group_from_ward_dual(*is_ward_dual(wd)) == g, "result 2+5");
      req(ward_dual_from_group(group_from_ward_dual(*is_ward_dual(wd))) == wd,
          "result 5+2");
      Groupoid dw = double_ward_from_group(g);
      req(group_from_double_ward(*is_double_ward(dw), e) == g, "result 3+6");
      req(double_ward_from_group(group_from_double_ward(*is_double_ward(dw),
                                                        e)) == dw,
          "result 6+3");
    }
  }
}

// ---------------------------------------------------------------- 2
void criterion_2() {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Table> wards;
    for_each_latin_square(n, [&](const Table& t) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (t[t[x][z]][t[y][z]] != t[x][y]) return;
      wards.push_back(t);
    });
    const int groups = enumerate_groups(n).size();
    const int ward_classes = iso_count(wards);
    req(ward_classes == groups,
        "order " + std::to_string(n) + ": " + std::to_string(ward_classes) +
            " Ward classes vs " + std::to_string(groups) + " groups");
  }
}

// ---------------------------------------------------------------- 3
void criterion_3(const Corpus& corpus) {
  for (const auto& item : corpus.items)
    for (DivisionKind k : kKinds) {
      DecoratedGroupoid q = divide(item.item, k);
      req(reconstruct(q, k).groupoid == item.item.groupoid,
          "divide-then-reconstruct (" + to_string(k) + ")");
      req(divide(reconstruct(q, k), k).groupoid == q.groupoid,
          "reconstruct-then-divide (" + to_string(k) + ")");
    }
}

// ---------------------------------------------------------------- 4
void criterion_4(const Corpus& corpus) {
  const std::vector<std::vector<const char*>> engine_laws = {
      {"3.24", "3.25", "3.26"}, {"3.84", "3.85", "3.86"}, {"3.133", "3.134"}};
  for (const auto& item : corpus.items)
    for (size_t ki = 0; ki < kKinds.size(); ++ki) {
      DecoratedGroupoid q = divide(item.item, kKinds[ki]);
      Report hand = lemma_suite(q, kKinds[ki]);
      req(hand.passed(), "lemma battery (" + to_string(kKinds[ki]) + "): " +
                             (hand.first_failure() ? hand.first_failure()->name
                                                   : ""));
      EvalContext ctx;
      ctx.decoration = &q.decoration;
      for (const char* law : engine_laws[ki]) {
        bool engine = check_identity(*find_identity(law), q.groupoid, ctx).passed;
        bool scan = check_division_law(q, law).passed;
        req(engine && scan && engine == scan,
            std::string("engine/scan disagreement on ") + law);
      }
    }
}

// ---------------------------------------------------------------- 5
void criterion_5(const Corpus& corpus) {
  for (const auto& item : corpus.items) {
    req(verify_result_12(divide(item.item, DivisionKind::right)).passed(),
        "result 12");
    req(verify_result_13(divide(item.item, DivisionKind::left)).passed(),
        "result 13");
    Report r14 = verify_result_14(divide(item.item, DivisionKind::double_division));
    req(r14.passed(), "result 14");
    for (const auto& c : r14.checks)
      req(c.passed, "result 14 equivalence: " + c.name);
  }
}

// ---------------------------------------------------------------- 6
void criterion_6(const Corpus& corpus) {
  for (const auto& item : corpus.items) {
    req(is_slg(dual(item.item.groupoid)), "theorem 3.17");
    DecoratedGroupoid r = divide(item.item, DivisionKind::right);
    DecoratedGroupoid l = divide(item.item, DivisionKind::left);
    DecoratedGroupoid d = divide(item.item, DivisionKind::double_division);
    req(check_membership(dual(r.groupoid), DivisionKind::left).has_value(),
        "theorem 3.18: dual of a right member");
    req(check_membership(dual(l.groupoid), DivisionKind::right).has_value(),
        "theorem 3.18: dual of a left member");
    req(check_membership(dual(d.groupoid), DivisionKind::double_division)
            .has_value(),
        "theorem 3.20");
    req(check_division_law(l, "3.84").passed, "corollary 3.19");
  }
}

// ---------------------------------------------------------------- 7
void criterion_7(const Corpus& corpus) {
  for (const auto& item : corpus.items) {
    DecoratedGroupoid r = divide(item.item, DivisionKind::right);
    DecoratedGroupoid d = divide(item.item, DivisionKind::double_division);
    DecoratedGroupoid to_d = slwq_sldwq_bijection(r, BijectionDirection::to_sldwq);
    DecoratedGroupoid to_r = slwq_sldwq_bijection(d, BijectionDirection::to_slwq);
    req(to_d.groupoid == d.groupoid, "bijection image (to sldwq)");
    req(to_r.groupoid == r.groupoid, "bijection image (to slwq)");
    req(slwq_sldwq_bijection(to_d, BijectionDirection::to_slwq).groupoid ==
            r.groupoid,
        "bijection round trip (slwq)");
    req(slwq_sldwq_bijection(to_r, BijectionDirection::to_sldwq).groupoid ==
            d.groupoid,
        "bijection round trip (sldwq)");
  }
}

// ---------------------------------------------------------------- 8
void criterion_8(const Corpus& corpus) {
  Corpus wide = enumerate_slgs(7, 6, 2);
  bool nonabelian_witness = false;
  auto check_item = [&](const CorpusItem& item) {
    const auto cls = item.item.decoration.classes();
    bool abelian = true;
    for (const auto& members : cls)
      abelian = abelian &&
                is_abelian_group(restrict_to(item.item.groupoid, members).value());
    for (DivisionKind k : {DivisionKind::right, DivisionKind::left}) {
      DecoratedGroupoid q = divide(item.item, k);
      bool medial = true;
      for (const auto& members : cls)
        medial = medial && is_medial(restrict_to(q.groupoid, members).value());
      req(medial == abelian, "corollary 3.7/3.12 mismatch");
      if (!medial) nonabelian_witness = true;
    }
  };
  for (const auto& item : corpus.items) check_item(item);
  for (const auto& item : wide.items) check_item(item);
  req(nonabelian_witness,
      "expected a nonabelian witness (an S3-based item) in the wide corpus");
}

// ---------------------------------------------------------------- 9
void criterion_9() {
  req(!is_quasigroup(fix::t_lp2()), "left projection is not a quasigroup");
  req(!check_membership(fix::t_z3(), DivisionKind::right).has_value(),
      "a group with varying squares is not a right-division member");
  req(!is_ward_dual(fix::t_z3rd()).has_value(),
      "subtraction has no left identity");
  req(idempotents(fix::t_dd4()).size() == 4, "double division inflates E");
  auto m = check_membership(fix::t_dd4(), DivisionKind::double_division);
  req(m.has_value(), "double membership despite extra idempotents");
  req(m->decoration.e_of_class == std::vector<int>{0, 3},
      "recovered designated idempotents");
}

// ---------------------------------------------------------------- 10
void criterion_10() {
  Report rep = search_question_1(6);
  bool outcome = false, control = false, space = false;
  for (const auto& c : rep.checks) {
    if (c.name == "search-space") space = !c.note.empty();
    if (c.name == "bounded-exhaustion" ||
        c.name.rfind("counterexample-", 0) == 0)
      outcome = true;
    if (c.name == "divide-outputs-control") control = c.passed;
  }
  req(space, "search-space statement present");
  req(outcome, "counterexample list or bounded-exhaustion statement present");
  req(control, "divide-outputs control");
}

}  // namespace

int main() {
  Corpus corpus = enumerate_slgs(10, 4, 3);

  struct Criterion {
    std::string name;
    std::function<void()> body;
  };
  const std::vector<Criterion> criteria = {
      {"criterion-1 group<->quasigroup round trips, orders <= 8",
       [] { criterion_1(); }},
      {"criterion-2 Ward quasigroup counts equal group counts, n <= 5",
       [] { criterion_2(); }},
      {"criterion-3 SLG round trips over enumerate_slgs(10,4,3)",
       [&] { criterion_3(corpus); }},
      {"criterion-4 lemma law batteries + engine agreement",
       [&] { criterion_4(corpus); }},
      {"criterion-5 results 12-14 with all-or-none equivalence",
       [&] { criterion_5(corpus); }},
      {"criterion-6 duality closure (3.17-3.20, corollary 3.19)",
       [&] { criterion_6(corpus); }},
      {"criterion-7 bijection composes to the identity",
       [&] { criterion_7(corpus); }},
      {"criterion-8 abelian/medial refinement with nonabelian witness",
       [&] { criterion_8(corpus); }},
      {"criterion-9 negative controls", [] { criterion_9(); }},
      {"criterion-10 bounded open-question search, total <= 6",
       [] { criterion_10(); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (error.empty()) {
      std::printf("PASS %s (%lld ms)\n", c.name.c_str(),
                  static_cast<long long>(ms));
    } else {
      std::printf("FAIL %s (%lld ms): %s\n", c.name.c_str(),
                   static_cast<long long>(ms), error.c_str());
      ++failures;
    }
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
