#pragma once

// Shared fixture tables. Everything that is not a literal definition is
// re-derived in oracles.hpp and cross-checked against these frozen copies
// in the tests before use.

#include "slg/clifford.hpp"
#include "slg/groupoid.hpp"

namespace fix {

using slg::Decoration;
using slg::DecoratedGroupoid;
using slg::Groupoid;
using slg::Table;

inline Groupoid t_z2() { return Groupoid({{0, 1}, {1, 0}}); }
inline Groupoid t_z3() { return Groupoid({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}); }
inline Groupoid t_z3rd() {
  return Groupoid({{0, 2, 1}, {1, 0, 2}, {2, 1, 0}});
}
inline Groupoid t_z3dd() {
  return Groupoid({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
}
inline Groupoid t_lp2() { return Groupoid({{0, 0}, {1, 1}}); }
inline Groupoid t_sl2() { return Groupoid({{0, 0}, {0, 1}}); }
inline Groupoid t_slg3() {
  return Groupoid({{0, 1, 2}, {1, 0, 2}, {2, 2, 2}});
}
inline Groupoid t_slg4() {
  return Groupoid({{0, 1, 2, 3}, {1, 2, 0, 3}, {2, 0, 1, 3}, {3, 3, 3, 3}});
}
inline Groupoid t_rd4() {
  return Groupoid({{0, 2, 1, 3}, {1, 0, 2, 3}, {2, 1, 0, 3}, {3, 3, 3, 3}});
}
inline Groupoid t_ld4() {
  return Groupoid({{0, 1, 2, 3}, {2, 0, 1, 3}, {1, 2, 0, 3}, {3, 3, 3, 3}});
}
inline Groupoid t_dd4() {
  return Groupoid({{0, 2, 1, 3}, {2, 1, 0, 3}, {1, 0, 2, 3}, {3, 3, 3, 3}});
}
inline Groupoid t_slg4iso() {
  return Groupoid({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 2, 3}, {3, 2, 3, 2}});
}

inline Decoration deco4() {
  return Decoration{{0, 0, 0, 1}, {0, 3}, {{0, 1}, {1, 1}}};
}
inline DecoratedGroupoid d_slg4() { return {t_slg4(), deco4()}; }
inline DecoratedGroupoid d_rd4() { return {t_rd4(), deco4()}; }
inline DecoratedGroupoid d_ld4() { return {t_ld4(), deco4()}; }
inline DecoratedGroupoid d_dd4() { return {t_dd4(), deco4()}; }

inline Decoration deco4iso() {
  return Decoration{{0, 0, 1, 1}, {0, 2}, {{0, 1}, {1, 1}}};
}
inline DecoratedGroupoid d_slg4iso() { return {t_slg4iso(), deco4iso()}; }

inline Decoration deco3() {
  return Decoration{{0, 0, 1}, {0, 2}, {{0, 1}, {1, 1}}};
}
inline DecoratedGroupoid d_slg3() { return {t_slg3(), deco3()}; }

inline Decoration single_class(const Groupoid& g, int e) {
  return Decoration{std::vector<int>(g.size(), 0), {e}, {{0}}};
}

// symmetric group on three letters, elements as the permutations of
// {0,1,2} in lexicographic order, composed left-to-right
inline Groupoid s3() {
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  Table t(6, std::vector<int>(6, -1));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int c[3];
      for (int i = 0; i < 3; ++i) c[i] = perms[b][perms[a][i]];
      for (int k = 0; k < 6; ++k)
        if (c[0] == perms[k][0] && c[1] == perms[k][1] && c[2] == perms[k][2])
          t[a][b] = k;
    }
  return Groupoid(t);
}

}  // namespace fix
