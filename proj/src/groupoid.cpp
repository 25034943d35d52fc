#include "slg/groupoid.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace slg {

Groupoid::Groupoid(Table table, std::vector<std::string> labels)
    : n_(static_cast<int>(table.size())),
      table_(std::move(table)),
      labels_(std::move(labels)) {
  if (n_ < 1) throw InvalidInput("groupoid: carrier must be nonempty");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n_)
      throw InvalidInput("groupoid: table is not square");
    for (int v : row)
      if (v < 0 || v >= n_)
        throw InvalidInput("groupoid: table entry out of range");
  }
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != n_)
      throw InvalidInput("groupoid: expected one label per element");
    std::set<std::string> uniq(labels_.begin(), labels_.end());
    if (static_cast<int>(uniq.size()) != n_)
      throw InvalidInput("groupoid: labels must be distinct");
  }
}

int Groupoid::apply(int x, int y) const {
  if (x < 0 || x >= n_ || y < 0 || y >= n_)
    throw InvalidInput("apply: index out of range");
  return table_[x][y];
}

std::optional<std::array<int, 3>> associativity_witness(const Groupoid& g) {
  const int n = g.size();
  const Table& t = g.table();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t[t[x][y]][z] != t[x][t[y][z]])
          return std::array<int, 3>{x, y, z};
  return std::nullopt;
}

bool is_associative(const Groupoid& g) {
  return !associativity_witness(g).has_value();
}

std::vector<int> idempotents(const Groupoid& g) {
  std::vector<int> out;
  for (int x = 0; x < g.size(); ++x)
    if (g.at(x, x) == x) out.push_back(x);
  return out;
}

bool is_quasigroup(const Groupoid& g) {
  const int n = g.size();
  const Table& t = g.table();
  std::vector<bool> seen(n);
  for (int x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), false);
    for (int y = 0; y < n; ++y) {
      if (seen[t[x][y]]) return false;
      seen[t[x][y]] = true;
    }
  }
  for (int y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), false);
    for (int x = 0; x < n; ++x) {
      if (seen[t[x][y]]) return false;
      seen[t[x][y]] = true;
    }
  }
  return true;
}

bool is_semilattice(const Groupoid& g) {
  const int n = g.size();
  const Table& t = g.table();
  for (int x = 0; x < n; ++x)
    if (t[x][x] != x) return false;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (t[x][y] != t[y][x]) return false;
  return is_associative(g);
}

std::optional<InverseMap> inverse_map(const Groupoid& g,
                                      InverseDiagnostics* diag) {
  const int n = g.size();
  const Table& t = g.table();
  InverseMap m;
  m.inv.assign(n, -1);
  bool ok = true;
  for (int x = 0; x < n; ++x) {
    int count = 0;
    for (int y = 0; y < n; ++y)
      if (t[t[x][y]][x] == x && t[t[y][x]][y] == y) {
        if (count == 0) m.inv[x] = y;
        ++count;
      }
    if (count != 1) {
      ok = false;
      if (diag) {
        if (count == 0)
          diag->no_inverse.push_back(x);
        else
          diag->ambiguous.push_back(x);
      } else {
        return std::nullopt;
      }
    }
  }
  if (!ok) return std::nullopt;
  return m;
}

Groupoid dual(const Groupoid& g) {
  const int n = g.size();
  Table t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = g.at(y, x);
  return Groupoid(std::move(t), g.labels());
}

namespace {

// Isomorphism-invariant profile of one element, used to prune the
// bijection search.
std::tuple<bool, int, int, int, int> element_profile(const Groupoid& g,
                                                     int x) {
  const int n = g.size();
  std::set<int> row, col;
  int row_fixed = 0, row_absorb = 0;
  for (int y = 0; y < n; ++y) {
    row.insert(g.at(x, y));
    col.insert(g.at(y, x));
    if (g.at(x, y) == y) ++row_fixed;
    if (g.at(x, y) == x) ++row_absorb;
  }
  return {g.at(x, x) == x, static_cast<int>(row.size()),
          static_cast<int>(col.size()), row_fixed, row_absorb};
}

bool extend_isomorphism(const Groupoid& g1, const Groupoid& g2,
                        std::vector<int>& phi, std::vector<bool>& used,
                        int x) {
  const int n = g1.size();
  if (x == n) return true;
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    phi[x] = v;
    bool ok = true;
    // products among the assigned prefix that are themselves assigned
    for (int u = 0; u <= x && ok; ++u) {
      int p = g1.at(x, u);
      if (p <= x && g2.at(v, phi[u]) != phi[p]) ok = false;
      if (ok) {
        int q = g1.at(u, x);
        if (q <= x && g2.at(phi[u], v) != phi[q]) ok = false;
      }
    }
    for (int a = 0; a < x && ok; ++a)
      for (int b = 0; b < x && ok; ++b)
        if (g1.at(a, b) == x && g2.at(phi[a], phi[b]) != v) ok = false;
    if (ok) {
      used[v] = true;
      if (extend_isomorphism(g1, g2, phi, used, x + 1)) return true;
      used[v] = false;
    }
  }
  phi[x] = -1;
  return false;
}

}  // namespace

std::optional<IsoWitness> find_isomorphism(const Groupoid& g1,
                                           const Groupoid& g2) {
  const int n = g1.size();
  if (n != g2.size()) return std::nullopt;
  std::multiset<std::tuple<bool, int, int, int, int>> p1, p2;
  for (int x = 0; x < n; ++x) {
    p1.insert(element_profile(g1, x));
    p2.insert(element_profile(g2, x));
  }
  if (p1 != p2) return std::nullopt;
  std::vector<int> phi(n, -1);
  std::vector<bool> used(n, false);
  if (!extend_isomorphism(g1, g2, phi, used, 0)) return std::nullopt;
  return IsoWitness{phi};
}

std::optional<Groupoid> restrict_to(const Groupoid& g,
                                    const std::vector<int>& subset) {
  std::vector<int> s(subset);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) throw InvalidInput("restrict: subset must be nonempty");
  std::vector<int> index(g.size(), -1);
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    if (s[i] < 0 || s[i] >= g.size())
      throw InvalidInput("restrict: subset element out of range");
    index[s[i]] = i;
  }
  const int m = static_cast<int>(s.size());
  Table t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = g.at(s[i], s[j]);
      if (index[p] < 0) return std::nullopt;  // not closed
      t[i][j] = index[p];
    }
  std::vector<std::string> labels;
  if (!g.labels().empty())
    for (int v : s) labels.push_back(g.labels()[v]);
  return Groupoid(std::move(t), std::move(labels));
}

bool is_group(const Groupoid& g) {
  return is_quasigroup(g) && is_associative(g);
}

int group_identity(const Groupoid& g) {
  if (!is_group(g)) throw NotAGroup("not a group (quasigroup + associative)");
  const int n = g.size();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      if (g.at(e, x) != x || g.at(x, e) != x) ok = false;
    if (ok) return e;
  }
  throw NotAGroup("associative quasigroup without identity");  // unreachable
}

std::vector<int> group_inverses(const Groupoid& g) {
  const int e = group_identity(g);
  const int n = g.size();
  std::vector<int> inv(n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (g.at(x, y) == e) {
        inv[x] = y;
        break;
      }
  return inv;
}

bool is_abelian_group(const Groupoid& g) {
  if (!is_group(g)) return false;
  for (int x = 0; x < g.size(); ++x)
    for (int y = x + 1; y < g.size(); ++y)
      if (g.at(x, y) != g.at(y, x)) return false;
  return true;
}

}  // namespace slg
