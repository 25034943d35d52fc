#include "slg/io.hpp"

#include <cstdint>
#include <fstream>

namespace slg {

namespace {

Table table_field(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_array())
    throw InvalidInput("missing or malformed '" + key + "'");
  Table t;
  for (const auto& row : j[key]) {
    if (!row.is_array()) throw InvalidInput("'" + key + "': row is not an array");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw InvalidInput("'" + key + "': non-integer entry");
      r.push_back(v.get<int>());
    }
    t.push_back(std::move(r));
  }
  return t;
}

std::vector<int> int_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidInput(what + ": expected an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InvalidInput(what + ": non-integer entry");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

Json table_to_json(const Groupoid& g) {
  Json j;
  j["n"] = g.size();
  j["table"] = g.table();
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

Json decoration_to_json(const Decoration& d) {
  Json j;
  j["class"] = d.class_of;
  j["e"] = d.e_of_class;
  j["class_table"] = d.class_table;
  return j;
}

Json decorated_to_json(const DecoratedGroupoid& dg) {
  Json j = table_to_json(dg.groupoid);
  j["decoration"] = decoration_to_json(dg.decoration);
  return j;
}

Groupoid table_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("table file: expected an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw InvalidInput("table file: missing integer 'n'");
  const int n = j["n"].get<int>();
  Table t = table_field(j, "table");
  if (static_cast<int>(t.size()) != n)
    throw InvalidInput("table file: 'n' does not match the table size");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array())
      throw InvalidInput("table file: 'labels' must be an array");
    for (const auto& l : j["labels"]) {
      if (!l.is_string())
        throw InvalidInput("table file: labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return Groupoid(std::move(t), std::move(labels));  // validates the rest
}

std::optional<Decoration> decoration_from_json(const Json& j) {
  if (!j.contains("decoration")) return std::nullopt;
  const Json& d = j["decoration"];
  if (!d.is_object()) throw InvalidInput("decoration: expected an object");
  Decoration out;
  if (!d.contains("class") || !d.contains("e") || !d.contains("class_table"))
    throw InvalidInput("decoration: needs 'class', 'e' and 'class_table'");
  out.class_of = int_list(d["class"], "decoration.class");
  out.e_of_class = int_list(d["e"], "decoration.e");
  out.class_table = table_field(d, "class_table");
  return out;
}

DecoratedGroupoid decorated_from_json(const Json& j) {
  Groupoid g = table_from_json(j);
  auto d = decoration_from_json(j);
  if (!d) throw EvalError("missing-decoration: table file has no decoration");
  validate_decoration(g, *d);
  return DecoratedGroupoid{std::move(g), std::move(*d)};
}

Json spec_to_json(const StrongSemilatticeSpec& spec) {
  Json j;
  j["semilattice"] = spec.semilattice.table();
  Json groups = Json::array();
  for (const auto& g : spec.groups) groups.push_back(g.table());
  j["groups"] = std::move(groups);
  Json homs = Json::array();
  for (const auto& [key, map] : spec.homs) {
    if (key.first == key.second) continue;  // identity homs are implicit
    Json h;
    h["from"] = key.first;
    h["to"] = key.second;
    h["map"] = map;
    homs.push_back(std::move(h));
  }
  j["homs"] = std::move(homs);
  return j;
}

StrongSemilatticeSpec spec_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("spec file: expected an object");
  StrongSemilatticeSpec spec;
  spec.semilattice = Groupoid(table_field(j, "semilattice"));
  if (!j.contains("groups") || !j["groups"].is_array())
    throw InvalidInput("spec file: missing 'groups'");
  for (const auto& g : j["groups"]) {
    Json wrap;
    wrap["t"] = g;
    spec.groups.push_back(Groupoid(table_field(wrap, "t")));
  }
  if (j.contains("homs")) {
    if (!j["homs"].is_array())
      throw InvalidInput("spec file: 'homs' must be an array");
    for (const auto& h : j["homs"]) {
      if (!h.is_object() || !h.contains("from") || !h.contains("to") ||
          !h.contains("map"))
        throw InvalidInput("spec file: hom needs 'from', 'to', 'map'");
      spec.homs[{h["from"].get<int>(), h["to"].get<int>()}] =
          int_list(h["map"], "hom map");
    }
  }
  return spec;
}

Json witness_to_json(const Witness& w) {
  Json j;
  j["check"] = w.check;
  Json a;
  for (const auto& [k, v] : w.assignment) a[k] = v;
  j["assignment"] = std::move(a);
  if (w.lhs) j["lhs"] = *w.lhs;
  if (w.rhs) j["rhs"] = *w.rhs;
  return j;
}

Json report_to_json(const Report& r) {
  Json j;
  j["title"] = r.title;
  j["passed"] = r.passed();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    if (!c.applicable) cj["applicable"] = false;
    if (!c.note.empty()) cj["note"] = c.note;
    if (c.witness) cj["witness"] = witness_to_json(*c.witness);
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string digest(const Json& normalized) {
  const std::string s = normalized.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InvalidInput("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace slg
