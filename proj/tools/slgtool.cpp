// slgtool: command-line workbench over Cayley-table JSON files.
//
// Exit status: 0 success, 1 mathematical failure (law violated, membership
// absent, theorem check failed), 2 input error (unreadable or malformed
// file, unknown identity, missing decoration).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "slg/division.hpp"
#include "slg/enumerate.hpp"
#include "slg/io.hpp"
#include "slg/term.hpp"

namespace {

using slg::CheckResult;
using slg::DecoratedGroupoid;
using slg::Decoration;
using slg::DivisionKind;
using slg::Groupoid;
using slg::Json;
using slg::Report;
using slg::Witness;

struct Invocation {
  std::string command;
  Json flags = Json::object();
  Json inputs = Json::array();
  Json results = Json::object();
  Json witnesses = Json::array();
  std::string report_path;  // empty: stdout
  bool human = false;

  void add_input(const std::string& path, const Json& normalized) {
    Json rec;
    rec["path"] = path;
    rec["digest"] = slg::digest(normalized);
    inputs.push_back(std::move(rec));
  }
  void add_witness(const Witness& w) { witnesses.push_back(witness_to_json(w)); }
  void add_report(const Report& rep, bool witnesses_on_fail = true) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
      Json cj;
      cj["name"] = c.name;
      cj["passed"] = c.passed;
      if (!c.applicable) cj["applicable"] = false;
      if (!c.note.empty()) cj["note"] = c.note;
      if (c.witness) cj["witness"] = witness_to_json(*c.witness);
      checks.push_back(std::move(cj));
      if (witnesses_on_fail && c.applicable && !c.passed && c.witness)
        add_witness(*c.witness);
    }
    results["checks"] = std::move(checks);
  }

  int emit(int code) {
    if (code == 1 && witnesses.empty()) {
      // every mathematical-failure report names at least one witness
      Witness w;
      w.check = "failure";
      if (results.contains("checks"))
        for (const auto& c : results["checks"])
          if (!c["passed"].get<bool>()) {
            w.check = c["name"].get<std::string>();
            break;
          }
      w.assignment = {{"exit", 1}};
      add_witness(w);
    }
    Json out;
    out["command"] = command;
    out["flags"] = flags;
    out["inputs"] = inputs;
    out["results"] = results;
    out["witnesses"] = witnesses;
    out["exit"] = code;
    const std::string text = out.dump(2) + "\n";
    if (!report_path.empty()) {
      std::ofstream f(report_path);
      f << text;
    }
    if (human) {
      std::cout << "command: " << command << "\n";
      if (results.contains("checks"))
        for (const auto& c : results["checks"])
          std::cout << (c["passed"].get<bool>() ? "PASS " : "FAIL ")
                    << c["name"].get<std::string>()
                    << (c.contains("note")
                            ? "  (" + c["note"].get<std::string>() + ")"
                            : "")
                    << "\n";
      std::cout << (code == 0 ? "ok" : code == 1 ? "mathematical failure"
                                                 : "input error")
                << "\n";
    } else if (report_path.empty()) {
      std::cout << text;
    }
    return code;
  }
};

struct LoadedTable {
  Groupoid g;
  std::optional<Decoration> deco;
};

LoadedTable load_table(Invocation& inv, const std::string& path) {
  Json j = slg::load_json_file(path);
  Groupoid g = slg::table_from_json(j);
  auto d = slg::decoration_from_json(j);
  if (d) slg::validate_decoration(g, *d);
  Json norm = d ? slg::decorated_to_json({g, *d}) : slg::table_to_json(g);
  inv.add_input(path, norm);
  return {std::move(g), std::move(d)};
}

DecoratedGroupoid slg_side_input(const LoadedTable& lt) {
  if (lt.deco) return {lt.g, *lt.deco};
  return slg::decompose_slg(lt.g).decorated;
}

DecoratedGroupoid member_side_input(const LoadedTable& lt, DivisionKind kind) {
  if (lt.deco) return {lt.g, *lt.deco};
  auto m = slg::check_membership(lt.g, kind);
  if (!m)
    throw slg::MembershipViolation("membership-violation: table is not a " +
                                   slg::to_string(kind) + "-division member");
  return *m;
}

Witness quasigroup_witness(const Groupoid& g) {
  const int n = g.size();
  for (int x = 0; x < n; ++x)
    for (int y1 = 0; y1 < n; ++y1)
      for (int y2 = y1 + 1; y2 < n; ++y2) {
        if (g.at(x, y1) == g.at(x, y2)) {
          Witness w;
          w.check = "latin-row";
          w.assignment = {{"x", x}, {"y1", y1}, {"y2", y2}};
          w.lhs = g.at(x, y1);
          w.rhs = g.at(x, y2);
          return w;
        }
        if (g.at(y1, x) == g.at(y2, x)) {
          Witness w;
          w.check = "latin-column";
          w.assignment = {{"x1", y1}, {"x2", y2}, {"y", x}};
          w.lhs = g.at(y1, x);
          w.rhs = g.at(y2, x);
          return w;
        }
      }
  Witness w;
  w.check = "latin";
  w.assignment = {{"n", n}};
  return w;
}

Witness engine_witness(const Groupoid& g, const std::string& law,
                       const slg::EvalContext& ctx = {}) {
  CheckResult r = slg::check_identity(*slg::find_identity(law), g, ctx);
  if (r.witness) return *r.witness;
  Witness w;
  w.check = law;
  w.assignment = {{"n", g.size()}};
  return w;
}

// ---------------------------------------------------------------------

int cmd_check(Invocation& inv, const std::string& kind,
              const std::string& path) {
  LoadedTable lt = load_table(inv, path);
  const Groupoid& g = lt.g;
  inv.results["kind"] = kind;
  bool ok = false;
  if (kind == "quasigroup") {
    ok = slg::is_quasigroup(g);
    if (!ok) inv.add_witness(quasigroup_witness(g));
  } else if (kind == "associative") {
    auto w = slg::associativity_witness(g);
    ok = !w.has_value();
    if (w) {
      Witness wit;
      wit.check = "associativity";
      wit.assignment = {{"x", (*w)[0]}, {"y", (*w)[1]}, {"z", (*w)[2]}};
      wit.lhs = g.at(g.at((*w)[0], (*w)[1]), (*w)[2]);
      wit.rhs = g.at((*w)[0], g.at((*w)[1], (*w)[2]));
      inv.add_witness(wit);
    }
  } else if (kind == "semilattice") {
    ok = slg::is_semilattice(g);
    if (!ok) {
      for (int x = 0; x < g.size() && inv.witnesses.empty(); ++x)
        if (g.at(x, x) != x) {
          Witness w;
          w.check = "idempotent";
          w.assignment = {{"x", x}};
          w.lhs = g.at(x, x);
          w.rhs = x;
          inv.add_witness(w);
        }
      for (int x = 0; x < g.size() && inv.witnesses.empty(); ++x)
        for (int y = 0; y < g.size() && inv.witnesses.empty(); ++y)
          if (g.at(x, y) != g.at(y, x)) {
            Witness w;
            w.check = "commutative";
            w.assignment = {{"x", x}, {"y", y}};
            w.lhs = g.at(x, y);
            w.rhs = g.at(y, x);
            inv.add_witness(w);
          }
      if (inv.witnesses.empty()) {
        auto w = slg::associativity_witness(g);
        Witness wit;
        wit.check = "associativity";
        wit.assignment = {{"x", (*w)[0]}, {"y", (*w)[1]}, {"z", (*w)[2]}};
        inv.add_witness(wit);
      }
    }
  } else if (kind == "group") {
    ok = slg::is_group(g);
    if (!ok) {
      if (!slg::is_quasigroup(g))
        inv.add_witness(quasigroup_witness(g));
      else {
        auto w = slg::associativity_witness(g);
        Witness wit;
        wit.check = "associativity";
        wit.assignment = {{"x", (*w)[0]}, {"y", (*w)[1]}, {"z", (*w)[2]}};
        inv.add_witness(wit);
      }
    } else {
      inv.results["identity"] = slg::group_identity(g);
      inv.results["abelian"] = slg::is_abelian_group(g);
    }
  } else if (kind == "ward") {
    auto w = slg::is_ward(g);
    ok = w.has_value();
    inv.results["ward"] = ok;
    if (ok)
      inv.results["r"] = w->r;
    else if (!slg::is_quasigroup(g))
      inv.add_witness(quasigroup_witness(g));
    else
      inv.add_witness(engine_witness(g, "1"));
  } else if (kind == "ward-dual") {
    auto w = slg::is_ward_dual(g);
    ok = w.has_value();
    inv.results["ward_dual"] = ok;
    if (ok)
      inv.results["r"] = w->r;
    else if (!slg::is_quasigroup(g))
      inv.add_witness(quasigroup_witness(g));
    else
      inv.add_witness(engine_witness(g, "7"));
  } else if (kind == "double-ward") {
    auto w = slg::is_double_ward(g);
    ok = w.has_value();
    inv.results["double_ward"] = ok;
    if (ok) {
      inv.results["e"] = w->r;
      inv.results["admissible"] = w->admissible;
    } else if (!slg::is_quasigroup(g)) {
      inv.add_witness(quasigroup_witness(g));
    } else {
      slg::EvalContext ctx;
      ctx.constants["e"] = 0;
      Witness wit = engine_witness(g, "13", ctx);
      wit.assignment.emplace_back("e", 0);
      inv.add_witness(wit);
    }
  } else if (kind == "slg") {
    slg::SlgDiagnosis diag;
    ok = slg::is_slg(g, &diag);
    inv.results["slg"] = ok;
    if (!ok) {
      inv.results["reason"] = diag.reason;
      Witness w;
      w.check = diag.reason;
      for (size_t i = 0; i < diag.witness.size(); ++i)
        w.assignment.emplace_back(std::string(1, static_cast<char>('x' + i)),
                                  diag.witness[i]);
      inv.add_witness(w);
    }
  } else if (kind == "medial") {
    ok = slg::is_medial(g);
    if (!ok) {
      for (int x = 0; x < g.size(); ++x)
        for (int y = 0; y < g.size(); ++y)
          for (int z = 0; z < g.size(); ++z)
            for (int v = 0; v < g.size(); ++v)
              if (inv.witnesses.empty() &&
                  g.at(g.at(x, y), g.at(z, v)) != g.at(g.at(x, z), g.at(y, v))) {
                Witness w;
                w.check = "medial";
                w.assignment = {{"x", x}, {"y", y}, {"z", z}, {"w", v}};
                w.lhs = g.at(g.at(x, y), g.at(z, v));
                w.rhs = g.at(g.at(x, z), g.at(y, v));
                inv.add_witness(w);
              }
    }
  } else if (kind == "inverse-groupoid") {
    slg::InverseDiagnostics diag;
    auto m = slg::inverse_map(g, &diag);
    ok = m.has_value();
    if (ok) {
      inv.results["inverse"] = m->inv;
    } else {
      inv.results["no_inverse"] = diag.no_inverse;
      inv.results["ambiguous"] = diag.ambiguous;
      Witness w;
      w.check = diag.no_inverse.empty() ? "ambiguous-inverse" : "no-inverse";
      w.assignment = {{"x", diag.no_inverse.empty() ? diag.ambiguous.front()
                                                    : diag.no_inverse.front()}};
      inv.add_witness(w);
    }
  } else {
    throw slg::InvalidInput("unknown check kind '" + kind + "'");
  }
  if (!inv.results.contains(kind == "ward-dual"     ? "ward_dual"
                            : kind == "double-ward" ? "double_ward"
                                                    : kind))
    inv.results[kind] = ok;
  return inv.emit(ok ? 0 : 1);
}

int cmd_divide(Invocation& inv, const std::string& kind_s,
               const std::string& path, const std::string& out) {
  DivisionKind kind = slg::division_kind_from_string(kind_s);
  LoadedTable lt = load_table(inv, path);
  DecoratedGroupoid s = slg_side_input(lt);
  DecoratedGroupoid q = slg::divide(s, kind);
  Json table = slg::decorated_to_json(q);
  inv.results["kind"] = kind_s;
  inv.results["result"] = table;
  if (!out.empty()) slg::write_json_file(out, table);
  return inv.emit(0);
}

int cmd_reconstruct(Invocation& inv, const std::string& kind_s,
                    const std::string& path, const std::string& out) {
  DivisionKind kind = slg::division_kind_from_string(kind_s);
  LoadedTable lt = load_table(inv, path);
  DecoratedGroupoid q = member_side_input(lt, kind);
  Report mem = slg::membership_report(q, kind);
  if (!mem.passed()) {
    inv.add_report(mem);
    inv.results["member"] = false;
    return inv.emit(1);
  }
  DecoratedGroupoid s = slg::reconstruct(q, kind);
  Json table = slg::decorated_to_json(s);
  inv.results["kind"] = kind_s;
  inv.results["result"] = table;
  if (!out.empty()) slg::write_json_file(out, table);
  return inv.emit(0);
}

int cmd_roundtrip(Invocation& inv, const std::string& kind_s,
                  const std::string& path) {
  DivisionKind kind = slg::division_kind_from_string(kind_s);
  LoadedTable lt = load_table(inv, path);
  DecoratedGroupoid dg = [&]() -> DecoratedGroupoid {
    if (lt.deco) return {lt.g, *lt.deco};
    if (slg::is_slg(lt.g)) return slg::decompose_slg(lt.g).decorated;
    return member_side_input(lt, kind);
  }();
  Report rep = slg::roundtrip_theorem(dg, kind);
  inv.results["kind"] = kind_s;
  inv.add_report(rep);
  inv.results["passed"] = rep.passed();
  return inv.emit(rep.passed() ? 0 : 1);
}

int cmd_membership(Invocation& inv, const std::string& kind_s,
                   const std::string& path) {
  DivisionKind kind = slg::division_kind_from_string(kind_s);
  LoadedTable lt = load_table(inv, path);
  auto m = slg::check_membership(lt.g, kind);
  inv.results["kind"] = kind_s;
  inv.results["member"] = m.has_value();
  if (m) {
    inv.results["decoration"] = slg::decoration_to_json(m->decoration);
    return inv.emit(0);
  }
  // explain the absence with the most informative witness available
  const Groupoid& g = lt.g;
  if (kind != DivisionKind::double_division) {
    for (int x = 0; x < g.size(); ++x) {
      int e = g.at(x, x);
      if (g.at(e, e) != e) {
        Witness w;
        w.check = "square-not-idempotent";
        w.assignment = {{"x", x}};
        w.lhs = g.at(e, e);
        w.rhs = e;
        inv.add_witness(w);
        return inv.emit(1);
      }
    }
    // squares fine: either class products scatter or a law fails
    std::map<std::pair<int, int>, int> cls_prod;
    for (int x = 0; x < g.size(); ++x)
      for (int y = 0; y < g.size(); ++y) {
        auto key = std::make_pair(g.at(x, x), g.at(y, y));
        int c = g.at(g.at(x, y), g.at(x, y));
        auto [it, fresh] = cls_prod.emplace(key, c);
        if (!fresh && it->second != c) {
          Witness w;
          w.check = "class-products-not-single";
          w.assignment = {{"x", x}, {"y", y}};
          w.lhs = c;
          w.rhs = it->second;
          inv.add_witness(w);
          return inv.emit(1);
        }
      }
  }
  Witness w;
  w.check = "no-admissible-decoration";
  w.assignment = {{"idempotents",
                   static_cast<int>(slg::idempotents(g).size())}};
  inv.add_witness(w);
  return inv.emit(1);
}

int cmd_build(Invocation& inv, const std::string& path,
              const std::string& out) {
  Json j = slg::load_json_file(path);
  inv.add_input(path, j);
  slg::StrongSemilatticeSpec spec = slg::spec_from_json(j);
  DecoratedGroupoid dg = slg::build_clifford(spec);
  Json table = slg::decorated_to_json(dg);
  inv.results["result"] = table;
  if (!out.empty()) slg::write_json_file(out, table);
  return inv.emit(0);
}

int cmd_decompose(Invocation& inv, const std::string& path,
                  const std::string& out) {
  LoadedTable lt = load_table(inv, path);
  slg::Decomposition dec = slg::decompose_slg(lt.g);
  inv.results["decoration"] = slg::decoration_to_json(dec.decorated.decoration);
  inv.results["renumbering"] = dec.renumbering;
  inv.results["spec"] = slg::spec_to_json(dec.spec);
  if (!out.empty()) slg::write_json_file(out, slg::spec_to_json(dec.spec));
  return inv.emit(0);
}

int cmd_identity(Invocation& inv, const std::string& name,
                 const std::string& path,
                 const std::vector<std::string>& binds,
                 const std::string& exists_const) {
  const slg::Identity* id = slg::find_identity(name);
  if (!id) throw slg::InvalidInput("unknown identity name '" + name + "'");
  LoadedTable lt = load_table(inv, path);
  slg::EvalContext ctx;
  if (lt.deco) ctx.decoration = &*lt.deco;
  for (const auto& b : binds) {
    auto eq = b.find('=');
    if (eq == std::string::npos)
      throw slg::InvalidInput("--bind expects NAME=VALUE");
    ctx.constants[b.substr(0, eq)] = std::stoi(b.substr(eq + 1));
  }
  inv.results["identity"] = name;
  if (!exists_const.empty()) {
    auto v = slg::exists_binding(*id, lt.g, exists_const, ctx);
    inv.results["exists"] = v.has_value();
    if (v) {
      inv.results["value"] = *v;
      return inv.emit(0);
    }
    ctx.constants[exists_const] = 0;
    CheckResult r = slg::check_identity(*id, lt.g, ctx);
    if (r.witness) inv.add_witness(*r.witness);
    return inv.emit(1);
  }
  CheckResult r = slg::check_identity(*id, lt.g, ctx);
  inv.results["holds"] = r.passed;
  if (r.witness) inv.add_witness(*r.witness);
  return inv.emit(r.passed ? 0 : 1);
}

int cmd_enumerate(Invocation& inv, const std::string& what, int n,
                  int max_total, int max_group, int max_classes,
                  const std::string& out_dir) {
  slg::Corpus corpus;
  if (what == "groups") {
    corpus = slg::enumerate_groups(n);
    inv.flags["n"] = n;
  } else if (what == "semilattices") {
    corpus = slg::enumerate_semilattices(n);
    inv.flags["n"] = n;
  } else if (what == "slgs") {
    corpus = slg::enumerate_slgs(max_total, max_group, max_classes);
    inv.flags["max-total"] = max_total;
    inv.flags["max-group"] = max_group;
    inv.flags["max-classes"] = max_classes;
  } else {
    throw slg::InvalidInput("unknown enumeration '" + what + "'");
  }
  inv.results["what"] = what;
  inv.results["count"] = corpus.size();
  Json items = Json::array();
  for (int i = 0; i < corpus.size(); ++i) {
    const auto& item = corpus.items[i];
    Json table = slg::decorated_to_json(item.item);
    Json rec;
    char name[32];
    std::snprintf(name, sizeof(name), "item_%03d.json", i);
    rec["file"] = name;
    rec["provenance"] = item.provenance;
    rec["digest"] = slg::digest(table);
    Json checks;
    checks["slg"] = slg::is_slg(item.item.groupoid);
    rec["checks"] = std::move(checks);
    items.push_back(rec);
    if (!out_dir.empty())
      slg::write_json_file(out_dir + "/" + name, table);
  }
  if (!out_dir.empty()) {
    Json manifest;
    manifest["command"] = "enumerate";
    manifest["what"] = what;
    manifest["flags"] = inv.flags;
    manifest["count"] = corpus.size();
    manifest["items"] = items;
    slg::write_json_file(out_dir + "/manifest.json", manifest);
    inv.results["out_dir"] = out_dir;
  }
  inv.results["items"] = std::move(items);
  return inv.emit(0);
}

int cmd_verify_theorems(Invocation& inv, int max_total, int max_group,
                        int max_classes, int groups_to) {
  inv.flags["max-total"] = max_total;
  inv.flags["max-group"] = max_group;
  inv.flags["max-classes"] = max_classes;
  inv.flags["groups-to"] = groups_to;
  slg::Corpus corpus = slg::enumerate_slgs(max_total, max_group, max_classes);
  inv.results["corpus_size"] = corpus.size();

  const std::vector<std::string> suites = {
      "roundtrips", "identity-suites", "results-12-14", "duality",
      "bijection",  "medial",          "corollary-3.4"};
  Report all("verify-theorems");
  for (const auto& s : suites) all.merge(slg::verify_corpus(corpus, s));
  slg::Corpus groups;
  for (int m = 1; m <= groups_to; ++m) {
    slg::Corpus c = slg::enumerate_groups(m);
    for (auto& item : c.items) groups.items.push_back(std::move(item));
  }
  all.merge(slg::verify_corpus(groups, "results-1-to-11"));

  // coverage: every theorem check must have run at least once
  const std::vector<std::pair<std::string, std::string>> tags = {
      {"theorem-3.5", "theorem-3.5/"},
      {"theorem-3.10", "theorem-3.10/"},
      {"theorem-3.15", "theorem-3.15/"},
      {"theorem-3.17", "/3.17"},
      {"theorem-3.18", "/3.18"},
      {"theorem-3.20", "/3.20"},
      {"theorem-3.21", "theorem-3.21/"},
      {"corollary-3.4", "corollary-3.4"},
      {"corollary-3.7", "corollary-3.7"},
      {"corollary-3.12", "corollary-3.12"},
      {"corollary-3.19", "/3.19"},
      {"result-12", "result-12/"},
      {"result-13", "result-13/"},
      {"result-14", "result-14/"},
      {"results-1-to-11", "/group-roundtrip"},
  };
  Json coverage;
  bool coverage_complete = true;
  for (const auto& [tag, needle] : tags) {
    int count = 0;
    for (const auto& c : all.checks)
      if (c.applicable && c.name.find(needle) != std::string::npos) ++count;
    coverage[tag] = count;
    coverage_complete = coverage_complete && count > 0;
  }
  inv.results["coverage"] = std::move(coverage);
  inv.results["coverage_complete"] = coverage_complete;

  int failures = 0;
  for (const auto& c : all.checks)
    if (c.applicable && !c.passed) ++failures;
  inv.results["checks_total"] = static_cast<int>(all.checks.size());
  inv.results["failures"] = failures;
  if (failures > 0 || !coverage_complete) {
    Json failed = Json::array();
    for (const auto& c : all.checks)
      if (c.applicable && !c.passed) {
        Json cj;
        cj["name"] = c.name;
        if (!c.note.empty()) cj["note"] = c.note;
        if (c.witness) {
          cj["witness"] = slg::witness_to_json(*c.witness);
          inv.add_witness(*c.witness);
        }
        failed.push_back(std::move(cj));
      }
    inv.results["failed"] = std::move(failed);
    if (inv.witnesses.empty()) {
      Witness w;
      w.check = failures > 0 ? "theorem-check-failed" : "coverage-incomplete";
      w.assignment = {{"failures", failures}};
      inv.add_witness(w);
    }
    return inv.emit(1);
  }
  return inv.emit(0);
}

int cmd_search_question1(Invocation& inv, int max_total) {
  inv.flags["max-total"] = max_total;
  Report rep = slg::search_question_1(max_total);
  inv.add_report(rep);
  inv.results["passed"] = rep.passed();
  return inv.emit(rep.passed() ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-algebra workbench for semilattices of groups and "
               "their division quasigroups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string kind, path, out, report_path, name, exists_const, what = "slgs";
  std::vector<std::string> binds;
  bool human = false;
  int n = 4, max_total = 10, max_group = 4, max_classes = 3, groups_to = 4,
      q1_total = 6;

  app.add_option("--report", report_path, "write the report JSON here");
  app.add_flag("--human", human, "human-readable rendering of the report");

  auto* c_check = app.add_subcommand("check", "structural predicates");
  c_check->add_option("--kind", kind,
                      "quasigroup|semilattice|group|associative|ward|"
                      "ward-dual|double-ward|slg|medial|inverse-groupoid")
      ->required();
  c_check->add_option("file", path)->required();

  auto* c_div = app.add_subcommand("divide", "division on a semilattice of groups");
  c_div->add_option("--kind", kind, "right|left|double")->required();
  c_div->add_option("file", path)->required();
  c_div->add_option("--out", out, "write the divided table here");

  auto* c_rec = app.add_subcommand("reconstruct",
                                   "recover the semilattice of groups");
  c_rec->add_option("--kind", kind, "right|left|double")->required();
  c_rec->add_option("file", path)->required();
  c_rec->add_option("--out", out);

  auto* c_rt = app.add_subcommand("roundtrip", "exact round-trip checks");
  c_rt->add_option("--kind", kind, "right|left|double")->required();
  c_rt->add_option("file", path)->required();

  auto* c_mem = app.add_subcommand("membership",
                                   "decide SLWQ/SLWDQ/SLDWQ membership");
  c_mem->add_option("--kind", kind, "right|left|double")->required();
  c_mem->add_option("file", path)->required();

  auto* c_build = app.add_subcommand("build",
                                     "build from a strong-semilattice spec");
  c_build->add_option("file", path)->required();
  c_build->add_option("--out", out);

  auto* c_dec = app.add_subcommand("decompose",
                                   "decompose into groups and linking homs");
  c_dec->add_option("file", path)->required();
  c_dec->add_option("--out", out, "write the recovered spec here");

  auto* c_id = app.add_subcommand("identity", "check a law from the catalogue");
  c_id->add_option("--name", name)->required();
  c_id->add_option("file", path)->required();
  c_id->add_option("--bind", binds, "constant binding NAME=VALUE");
  c_id->add_option("--exists", exists_const,
                   "search for a value of this constant");

  auto* c_enum = app.add_subcommand("enumerate", "enumerate small structures");
  c_enum->add_option("--what", what, "groups|semilattices|slgs");
  c_enum->add_option("--n", n, "order (groups/semilattices)");
  c_enum->add_option("--max-total", max_total);
  c_enum->add_option("--max-group", max_group);
  c_enum->add_option("--max-classes", max_classes);
  c_enum->add_option("--out-dir", out, "export tables and a manifest");

  auto* c_vt = app.add_subcommand("verify-theorems",
                                  "run every theorem check over a corpus");
  c_vt->add_option("--max-total", max_total);
  c_vt->add_option("--max-group", max_group);
  c_vt->add_option("--max-classes", max_classes);
  c_vt->add_option("--groups-to", groups_to,
                   "verify the group correspondences up to this order");

  auto* c_q1 = app.add_subcommand("search-question1",
                                  "bounded search on the open question");
  c_q1->add_option("--max-total", q1_total);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Invocation inv;
  inv.report_path = report_path;
  inv.human = human;
  try {
    if (app.got_subcommand(c_check)) {
      inv.command = "check";
      inv.flags["kind"] = kind;
      return cmd_check(inv, kind, path);
    }
    if (app.got_subcommand(c_div)) {
      inv.command = "divide";
      inv.flags["kind"] = kind;
      return cmd_divide(inv, kind, path, out);
    }
    if (app.got_subcommand(c_rec)) {
      inv.command = "reconstruct";
      inv.flags["kind"] = kind;
      return cmd_reconstruct(inv, kind, path, out);
    }
    if (app.got_subcommand(c_rt)) {
      inv.command = "roundtrip";
      inv.flags["kind"] = kind;
      return cmd_roundtrip(inv, kind, path);
    }
    if (app.got_subcommand(c_mem)) {
      inv.command = "membership";
      inv.flags["kind"] = kind;
      return cmd_membership(inv, kind, path);
    }
    if (app.got_subcommand(c_build)) {
      inv.command = "build";
      return cmd_build(inv, path, out);
    }
    if (app.got_subcommand(c_dec)) {
      inv.command = "decompose";
      return cmd_decompose(inv, path, out);
    }
    if (app.got_subcommand(c_id)) {
      inv.command = "identity";
      inv.flags["name"] = name;
      return cmd_identity(inv, name, path, binds, exists_const);
    }
    if (app.got_subcommand(c_enum)) {
      inv.command = "enumerate";
      inv.flags["what"] = what;
      return cmd_enumerate(inv, what, n, max_total, max_group, max_classes,
                           out);
    }
    if (app.got_subcommand(c_vt)) {
      inv.command = "verify-theorems";
      return cmd_verify_theorems(inv, max_total, max_group, max_classes,
                                 groups_to);
    }
    if (app.got_subcommand(c_q1)) {
      inv.command = "search-question1";
      return cmd_search_question1(inv, q1_total);
    }
    return 2;
  } catch (const slg::EvalError& e) {
    inv.results["error"] = {{"type", "input-error"}, {"message", e.what()}};
    return inv.emit(2);
  } catch (const slg::InvalidInput& e) {
    inv.results["error"] = {{"type", "input-error"}, {"message", e.what()}};
    return inv.emit(2);
  } catch (const slg::MathError& e) {
    inv.results["error"] = {{"type", "math-failure"}, {"message", e.what()}};
    Witness w;
    w.check = "error";
    w.assignment = {{"exit", 1}};
    if (inv.witnesses.empty()) inv.add_witness(w);
    return inv.emit(1);
  } catch (const std::logic_error& e) {
    inv.results["error"] = {{"type", "internal-check-failed"},
                            {"message", e.what()}};
    Witness w;
    w.check = "internal";
    w.assignment = {{"exit", 1}};
    if (inv.witnesses.empty()) inv.add_witness(w);
    return inv.emit(1);
  } catch (const std::exception& e) {
    inv.results["error"] = {{"type", "error"}, {"message", e.what()}};
    return inv.emit(2);
  }
}
