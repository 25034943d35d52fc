#include "slg/ward.hpp"

#include <stdexcept>

namespace slg {

std::string to_string(WardKind k) {
  switch (k) {
    case WardKind::ward:
      return "ward";
    case WardKind::ward_dual:
      return "ward-dual";
    case WardKind::double_ward:
      return "double-ward";
  }
  return "?";
}

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(what);
}

// Laws (14)-(19) for a given e; these follow from (13) on a quasigroup, so
// a failure means the recognizer is broken.
void assert_double_ward_laws(const Groupoid& g, int e) {
  const int n = g.size();
  const Table& t = g.table();
  require(t[e][e] == e, "double-ward: e*e = e failed");
  for (int x = 0; x < n; ++x) {
    require(t[e][x] == t[x][e], "double-ward: e*x = x*e failed");
    require(t[x][t[x][e]] == e && t[t[e][x]][x] == e,
            "double-ward: x*(x*e) = e = (e*x)*x failed");
    for (int y = 0; y < n; ++y) {
      require(t[t[y][x]][y] == x && t[y][t[x][y]] == x,
              "double-ward: (y*x)*y = x = y*(x*y) failed");
      require(t[x][y] == t[e][t[t[e][y]][t[e][x]]],
              "double-ward: x*y = e*((e*y)*(e*x)) failed");
      for (int z = 0; z < n; ++z)
        require(t[t[e][t[x][z]]][t[t[e][y]][z]] == t[x][y],
                "double-ward: (e*(x*z))*((e*y)*z) = x*y failed");
    }
  }
}

}  // namespace

std::optional<WardStructure> is_ward(const Groupoid& g) {
  if (!is_quasigroup(g)) return std::nullopt;
  const int n = g.size();
  const Table& t = g.table();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t[t[x][z]][t[y][z]] != t[x][y]) return std::nullopt;
  const int r = t[0][0];
  // derived laws; failures are internal errors, not negatives
  for (int x = 0; x < n; ++x) {
    require(t[x][x] == r, "ward: unipotence failed");
    require(t[x][r] == x, "ward: right identity failed");
    require(t[r][t[r][x]] == x, "ward: r*(r*x) = x failed");
    for (int y = 0; y < n; ++y) {
      require(t[r][t[x][y]] == t[y][x], "ward: r*(x*y) = y*x failed");
      for (int z = 0; z < n; ++z)
        require(t[t[x][y]][z] == t[x][t[z][t[r][y]]],
                "ward: (x*y)*z = x*(z*(r*y)) failed");
    }
  }
  return WardStructure{g, r, WardKind::ward, {r}};
}

std::optional<WardStructure> is_ward_dual(const Groupoid& g) {
  if (!is_quasigroup(g)) return std::nullopt;
  const int n = g.size();
  const Table& t = g.table();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t[t[z][x]][t[z][y]] != t[x][y]) return std::nullopt;
  const int r = t[0][0];
  for (int x = 0; x < n; ++x) {
    require(t[x][x] == r, "ward-dual: unipotence failed");
    require(t[r][x] == x, "ward-dual: left identity failed");
    require(t[t[x][r]][r] == x, "ward-dual: (x*r)*r = x failed");
    for (int y = 0; y < n; ++y) {
      require(t[x][y] == t[t[y][x]][r], "ward-dual: x*y = (y*x)*r failed");
      for (int z = 0; z < n; ++z)
        require(t[x][t[y][z]] == t[t[t[y][r]][x]][z],
                "ward-dual: x*(y*z) = ((y*r)*x)*z failed");
    }
  }
  return WardStructure{g, r, WardKind::ward_dual, {r}};
}

std::optional<WardStructure> is_double_ward(const Groupoid& g) {
  if (!is_quasigroup(g)) return std::nullopt;
  const int n = g.size();
  const Table& t = g.table();
  std::vector<int> admissible;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    const int ee = t[e][e];
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z)
          if (t[t[ee][t[x][z]]][t[t[e][y]][z]] != t[x][y]) ok = false;
    if (ok) admissible.push_back(e);
  }
  if (admissible.empty()) return std::nullopt;
  for (int e : admissible) assert_double_ward_laws(g, e);
  return WardStructure{g, admissible.front(), WardKind::double_ward,
                       admissible};
}

Groupoid ward_from_group(const Groupoid& g) {
  const std::vector<int> inv = group_inverses(g);
  const int n = g.size();
  Table t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = g.at(x, inv[y]);
  Groupoid out(std::move(t), g.labels());
  if (!is_ward(out)) throw std::logic_error("ward_from_group: result not Ward");
  return out;
}

Groupoid ward_dual_from_group(const Groupoid& g) {
  const std::vector<int> inv = group_inverses(g);
  const int n = g.size();
  Table t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = g.at(y, inv[x]);
  Groupoid out(std::move(t), g.labels());
  if (!is_ward_dual(out))
    throw std::logic_error("ward_dual_from_group: result not Ward dual");
  return out;
}

Groupoid double_ward_from_group(const Groupoid& g) {
  const std::vector<int> inv = group_inverses(g);
  const int n = g.size();
  Table t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = g.at(inv[x], inv[y]);
  Groupoid out(std::move(t), g.labels());
  auto w = is_double_ward(out);
  if (!w) throw std::logic_error("double_ward_from_group: result not DW");
  const int e = group_identity(g);
  bool found = false;
  for (int a : w->admissible) found = found || a == e;
  if (!found)
    throw std::logic_error("double_ward_from_group: identity not admissible");
  return out;
}

namespace {

WardStructure revalidate(const WardStructure& w, WardKind expected) {
  if (w.kind != expected)
    throw MathError("malformed structure: wrong kind, expected " +
                    to_string(expected));
  std::optional<WardStructure> again;
  switch (expected) {
    case WardKind::ward:
      again = is_ward(w.groupoid);
      break;
    case WardKind::ward_dual:
      again = is_ward_dual(w.groupoid);
      break;
    case WardKind::double_ward:
      again = is_double_ward(w.groupoid);
      break;
  }
  if (!again)
    throw MathError("malformed structure: table is not " + to_string(expected));
  if (expected != WardKind::double_ward && again->r != w.r)
    throw MathError("malformed structure: stated identity element is wrong");
  return *again;
}

int pick_admissible(const WardStructure& valid, std::optional<int> e) {
  int chosen = e.value_or(valid.r);
  for (int a : valid.admissible)
    if (a == chosen) return chosen;
  throw MathError("malformed structure: e is not admissible");
}

}  // namespace

Groupoid group_from_ward(const WardStructure& w) {
  const WardStructure v = revalidate(w, WardKind::ward);
  const int n = v.groupoid.size();
  const Table& t = v.groupoid.table();
  const int r = v.r;
  Table out(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out[x][y] = t[x][t[r][y]];
  Groupoid grp(std::move(out), v.groupoid.labels());
  if (!is_group(grp) || group_identity(grp) != r)
    throw std::logic_error("group_from_ward: result not a group at r");
  const std::vector<int> inv = group_inverses(grp);
  for (int x = 0; x < n; ++x)
    if (inv[x] != t[r][x])
      throw std::logic_error("group_from_ward: inverse is not r*x");
  return grp;
}

Groupoid group_from_ward_dual(const WardStructure& w) {
  const WardStructure v = revalidate(w, WardKind::ward_dual);
  const int n = v.groupoid.size();
  const Table& t = v.groupoid.table();
  const int r = v.r;
  // (y*r)*x rather than (x*r)*y: the latter recovers the opposite group,
  // which breaks the exact round trip with x*y = y o inv(x) once the
  // group is noncommutative. Identity and inverses are unchanged.
  Table out(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out[x][y] = t[t[y][r]][x];
  Groupoid grp(std::move(out), v.groupoid.labels());
  if (!is_group(grp) || group_identity(grp) != r)
    throw std::logic_error("group_from_ward_dual: result not a group at r");
  const std::vector<int> inv = group_inverses(grp);
  for (int x = 0; x < n; ++x)
    if (inv[x] != t[x][r])
      throw std::logic_error("group_from_ward_dual: inverse is not x*r");
  return grp;
}

Groupoid group_from_double_ward(const WardStructure& w, std::optional<int> e) {
  const WardStructure v = revalidate(w, WardKind::double_ward);
  const int ee = pick_admissible(v, e);
  const int n = v.groupoid.size();
  const Table& t = v.groupoid.table();
  Table out(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out[x][y] = t[t[ee][x]][t[ee][y]];
  Groupoid grp(std::move(out), v.groupoid.labels());
  if (!is_group(grp) || group_identity(grp) != ee)
    throw std::logic_error("group_from_double_ward: result not a group at e");
  const std::vector<int> inv = group_inverses(grp);
  for (int x = 0; x < n; ++x)
    if (inv[x] != t[ee][x])
      throw std::logic_error("group_from_double_ward: inverse is not e*x");
  return grp;
}

Groupoid ward_to_double_ward(const WardStructure& w) {
  const WardStructure v = revalidate(w, WardKind::ward);
  const int n = v.groupoid.size();
  const Table& t = v.groupoid.table();
  const int r = v.r;
  Table out(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out[x][y] = t[t[r][x]][y];
  Groupoid dw(std::move(out), v.groupoid.labels());
  auto res = is_double_ward(dw);
  bool ok = res.has_value();
  if (ok) {
    ok = false;
    for (int a : res->admissible) ok = ok || a == r;
  }
  if (!ok)
    throw std::logic_error("ward_to_double_ward: result not DW at e = r");
  return dw;
}

Groupoid double_ward_to_ward(const WardStructure& w, std::optional<int> e) {
  const WardStructure v = revalidate(w, WardKind::double_ward);
  const int ee = pick_admissible(v, e);
  const int n = v.groupoid.size();
  const Table& t = v.groupoid.table();
  Table out(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out[x][y] = t[t[ee][x]][y];
  Groupoid ward(std::move(out), v.groupoid.labels());
  auto res = is_ward(ward);
  if (!res || res->r != ee)
    throw std::logic_error("double_ward_to_ward: result not Ward at r = e");
  // the two conversions are mutually inverse
  Groupoid back = ward_to_double_ward(*res);
  if (back != v.groupoid)
    throw std::logic_error("double_ward_to_ward: round trip is not identity");
  return ward;
}

bool is_medial(const Groupoid& g) {
  const int n = g.size();
  const Table& t = g.table();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w)
          if (t[t[x][y]][t[z][w]] != t[t[x][z]][t[y][w]]) return false;
  return true;
}

}  // namespace slg
