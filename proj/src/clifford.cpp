#include "slg/clifford.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace slg {

std::vector<std::vector<int>> Decoration::classes() const {
  std::vector<std::vector<int>> out(num_classes());
  for (int x = 0; x < static_cast<int>(class_of.size()); ++x)
    out[class_of[x]].push_back(x);
  return out;
}

void validate_decoration(const Groupoid& g, const Decoration& d) {
  const int n = g.size();
  const int k = d.num_classes();
  if (k < 1) throw InvalidInput("decoration: no classes");
  if (static_cast<int>(d.class_of.size()) != n)
    throw InvalidInput("decoration: class map size mismatch");
  for (int c : d.class_of)
    if (c < 0 || c >= k) throw InvalidInput("decoration: class index out of range");
  Groupoid ct{d.class_table};  // validates shape and ranges
  if (ct.size() != k)
    throw InvalidInput("decoration: class table size mismatch");
  if (!is_semilattice(ct))
    throw InvalidInput("decoration: class table is not a semilattice");
  for (int a = 0; a < k; ++a) {
    int e = d.e_of_class[a];
    if (e < 0 || e >= n)
      throw InvalidInput("decoration: designated idempotent out of range");
    if (d.class_of[e] != a)
      throw InvalidInput("decoration: designated idempotent not in its class");
    if (g.at(e, e) != e)
      throw InvalidInput("decoration: designated element is not idempotent");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (d.class_of[g.at(x, y)] != d.class_table[d.class_of[x]][d.class_of[y]])
        throw InvalidInput(
            "decoration: class products do not land in the meet class");
}

void require_decorated_slg(const DecoratedGroupoid& dg) {
  validate_decoration(dg.groupoid, dg.decoration);
  if (auto w = associativity_witness(dg.groupoid))
    throw NotAnSlg("not associative at (" + std::to_string((*w)[0]) + "," +
                   std::to_string((*w)[1]) + "," + std::to_string((*w)[2]) +
                   ")");
  const auto cls = dg.decoration.classes();
  for (int a = 0; a < dg.decoration.num_classes(); ++a) {
    auto sub = restrict_to(dg.groupoid, cls[a]);
    if (!sub) throw NotAnSlg("class " + std::to_string(a) + " is not closed");
    if (!is_group(*sub))
      throw NotAnSlg("class " + std::to_string(a) + " is not a group");
    int local_e = static_cast<int>(
        std::lower_bound(cls[a].begin(), cls[a].end(),
                         dg.decoration.e_of_class[a]) -
        cls[a].begin());
    if (group_identity(*sub) != local_e)
      throw NotAnSlg("designated idempotent of class " + std::to_string(a) +
                     " is not its group identity");
  }
}

namespace {

bool is_hom(const Groupoid& a, const Groupoid& b, const std::vector<int>& h) {
  if (static_cast<int>(h.size()) != a.size()) return false;
  for (int v : h)
    if (v < 0 || v >= b.size()) return false;
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (h[a.at(x, y)] != b.at(h[x], h[y])) return false;
  return true;
}

}  // namespace

DecoratedGroupoid build_clifford(const StrongSemilatticeSpec& spec) {
  const Groupoid& Y = spec.semilattice;
  const int k = Y.size();
  if (!is_semilattice(Y))
    throw MathError("non-semilattice: class table fails the semilattice laws");
  if (static_cast<int>(spec.groups.size()) != k)
    throw MathError("expected one group per class");
  for (int a = 0; a < k; ++a)
    if (!is_group(spec.groups[a]))
      throw MathError("non-group: component " + std::to_string(a));

  // homs must exist exactly for b <= a; hom(a,a) defaults to the identity
  std::vector<std::vector<const std::vector<int>*>> hom(
      k, std::vector<const std::vector<int>*>(k, nullptr));
  std::vector<std::vector<int>> identity_homs(k);
  for (int a = 0; a < k; ++a) {
    identity_homs[a].resize(spec.groups[a].size());
    std::iota(identity_homs[a].begin(), identity_homs[a].end(), 0);
    hom[a][a] = &identity_homs[a];
  }
  for (const auto& [key, map] : spec.homs) {
    auto [a, b] = key;
    if (a < 0 || a >= k || b < 0 || b >= k)
      throw MathError("hom endpoints out of range");
    if (Y.at(a, b) != b)
      throw MathError("unexpected hom: " + std::to_string(b) +
                      " is not below " + std::to_string(a));
    if (a == b) {
      if (map != identity_homs[a])
        throw MathError("hom(" + std::to_string(a) + "," + std::to_string(a) +
                        ") must be the identity");
      continue;
    }
    if (!is_hom(spec.groups[a], spec.groups[b], map))
      throw MathError("non-homomorphism: hom(" + std::to_string(a) + "," +
                      std::to_string(b) + ")");
    hom[a][b] = &map;
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (Y.at(a, b) == b && hom[a][b] == nullptr)
        throw MathError("missing hom(" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
  // coherence: c <= b <= a composes
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (Y.at(a, b) != b) continue;
      for (int c = 0; c < k; ++c) {
        if (Y.at(b, c) != c) continue;
        for (int x = 0; x < spec.groups[a].size(); ++x)
          if ((*hom[b][c])[(*hom[a][b])[x]] != (*hom[a][c])[x])
            throw MathError("incoherent-homs: (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")");
      }
    }

  std::vector<int> offset(k + 1, 0);
  for (int a = 0; a < k; ++a) offset[a + 1] = offset[a] + spec.groups[a].size();
  const int n = offset[k];
  Decoration d;
  d.class_table = Y.table();
  d.class_of.resize(n);
  d.e_of_class.resize(k);
  for (int a = 0; a < k; ++a) {
    for (int i = 0; i < spec.groups[a].size(); ++i)
      d.class_of[offset[a] + i] = a;
    d.e_of_class[a] = offset[a] + group_identity(spec.groups[a]);
  }
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      const int c = Y.at(a, b);
      for (int i = 0; i < spec.groups[a].size(); ++i)
        for (int j = 0; j < spec.groups[b].size(); ++j)
          t[offset[a] + i][offset[b] + j] =
              offset[c] + spec.groups[c].at((*hom[a][c])[i], (*hom[b][c])[j]);
    }
  DecoratedGroupoid out{Groupoid(std::move(t)), std::move(d)};
  if (!is_slg(out.groupoid))
    throw std::logic_error("build_clifford: product is not an SLG");
  require_decorated_slg(out);
  return out;
}

bool is_slg(const Groupoid& g, SlgDiagnosis* diag) {
  if (auto w = associativity_witness(g)) {
    if (diag) *diag = {"not-associative", {(*w)[0], (*w)[1], (*w)[2]}};
    return false;
  }
  const int n = g.size();
  const Table& t = g.table();
  for (int x = 0; x < n; ++x) {
    bool regular = false;
    for (int y = 0; y < n && !regular; ++y)
      regular = t[x][y] == t[y][x] && t[t[x][y]][x] == x;
    if (!regular) {
      if (diag) *diag = {"not-completely-regular", {x}};
      return false;
    }
  }
  const auto idem = idempotents(g);
  for (size_t i = 0; i < idem.size(); ++i)
    for (size_t j = i + 1; j < idem.size(); ++j)
      if (t[idem[i]][idem[j]] != t[idem[j]][idem[i]]) {
        if (diag) *diag = {"idempotents-not-commuting", {idem[i], idem[j]}};
        return false;
      }
  return true;
}

Decomposition decompose_slg(const Groupoid& g) {
  SlgDiagnosis diag;
  if (!is_slg(g, &diag)) throw NotAnSlg("not-an-slg: " + diag.reason);
  const int n = g.size();
  const Table& t = g.table();
  const auto idem = idempotents(g);

  // maximal subgroup at each idempotent
  std::vector<std::vector<int>> groups_members;
  for (int e : idem) {
    std::vector<int> h;
    for (int x = 0; x < n; ++x) {
      if (t[x][e] != x || t[e][x] != x) continue;
      bool invertible = false;
      for (int y = 0; y < n && !invertible; ++y)
        invertible = t[x][y] == e && t[y][x] == e;
      if (invertible) h.push_back(x);
    }
    groups_members.push_back(std::move(h));
  }
  // classes ordered by ascending least member (members are ascending already)
  std::vector<int> order(idem.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return groups_members[a].front() < groups_members[b].front();
  });

  const int k = static_cast<int>(idem.size());
  Decoration d;
  d.class_of.assign(n, -1);
  d.e_of_class.resize(k);
  for (int a = 0; a < k; ++a) {
    d.e_of_class[a] = idem[order[a]];
    for (int x : groups_members[order[a]]) {
      if (d.class_of[x] != -1)
        throw std::logic_error("decompose_slg: maximal subgroups overlap");
      d.class_of[x] = a;
    }
  }
  for (int x = 0; x < n; ++x)
    if (d.class_of[x] == -1)
      throw std::logic_error("decompose_slg: element in no maximal subgroup");
  d.class_table.assign(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      d.class_table[a][b] = d.class_of[t[d.e_of_class[a]][d.e_of_class[b]]];

  DecoratedGroupoid dec{g, d};
  require_decorated_slg(dec);

  StrongSemilatticeSpec spec;
  spec.semilattice = Groupoid(d.class_table);
  const auto cls = d.classes();
  std::vector<int> offset(k + 1, 0);
  for (int a = 0; a < k; ++a) {
    auto sub = restrict_to(g, cls[a]);
    spec.groups.push_back(*sub);
    offset[a + 1] = offset[a] + static_cast<int>(cls[a].size());
  }
  auto rank_in = [&](int a, int x) {
    return static_cast<int>(
        std::lower_bound(cls[a].begin(), cls[a].end(), x) - cls[a].begin());
  };
  // hom(a,b): multiply by the designated idempotent below
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b || d.class_table[a][b] != b) continue;
      std::vector<int> h(cls[a].size());
      for (size_t i = 0; i < cls[a].size(); ++i)
        h[i] = rank_in(b, t[cls[a][i]][d.e_of_class[b]]);
      spec.homs[{a, b}] = std::move(h);
    }

  std::vector<int> renumbering(n);
  for (int x = 0; x < n; ++x)
    renumbering[x] = offset[d.class_of[x]] + rank_in(d.class_of[x], x);

  DecoratedGroupoid rebuilt = build_clifford(spec);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (rebuilt.groupoid.at(renumbering[x], renumbering[y]) !=
          renumbering[t[x][y]])
        throw std::logic_error("decompose_slg: rebuild mismatch");

  return Decomposition{std::move(dec), std::move(spec), std::move(renumbering)};
}

InverseMap slg_inverse_map(const DecoratedGroupoid& dg) {
  require_decorated_slg(dg);
  const int n = dg.groupoid.size();
  const Table& t = dg.groupoid.table();
  InverseMap m;
  m.inv.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    const int e = dg.decoration.e_of(x);
    for (int y = 0; y < n; ++y)
      if (dg.decoration.class_of[y] == dg.decoration.class_of[x] &&
          t[x][y] == e && t[y][x] == e) {
        m.inv[x] = y;
        break;
      }
    if (m.inv[x] < 0)
      throw std::logic_error("slg_inverse_map: no inverse within class");
  }
  return m;
}

}  // namespace slg
