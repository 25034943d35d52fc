#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "slg/groupoid.hpp"

namespace slg {

/// The class structure attached to a table: a partition of the carrier into
/// classes, one designated idempotent per class, and a semilattice on the
/// classes. Subscripted constants e_alpha and e_{alpha beta} are computed
/// from it.
struct Decoration {
  std::vector<int> class_of;    // element -> class index
  std::vector<int> e_of_class;  // class index -> designated idempotent
  Table class_table;            // k x k semilattice

  int num_classes() const { return static_cast<int>(e_of_class.size()); }
  int meet(int a, int b) const { return class_table[a][b]; }
  /// Designated idempotent of the meet of the classes of elements x and y.
  int meet_e(int x, int y) const {
    return e_of_class[class_table[class_of[x]][class_of[y]]];
  }
  int e_of(int x) const { return e_of_class[class_of[x]]; }
  /// Members of each class, ascending, indexed by class.
  std::vector<std::vector<int>> classes() const;
};

/// Throws InvalidInput unless: the class table is a semilattice, every
/// designated idempotent is idempotent and lies in its class, and every
/// product of class alpha with class beta lands in class alpha^beta.
void validate_decoration(const Groupoid& g, const Decoration& d);

struct DecoratedGroupoid {
  Groupoid groupoid;
  Decoration decoration;
};

/// Full validation of a decorated semilattice-of-groups: decoration valid,
/// table associative, every class a group whose identity is the designated
/// idempotent. Throws NotAnSlg / InvalidInput.
void require_decorated_slg(const DecoratedGroupoid& dg);

/// Generative description of a semilattice of groups: a semilattice, one
/// group per class, and linking homomorphisms hom(a,b): G_a -> G_b defined
/// exactly when b <= a (that is, ab = b). hom(a,a) may be omitted; when
/// present it must be the identity.
struct StrongSemilatticeSpec {
  Groupoid semilattice{Table{{0}}};
  std::vector<Groupoid> groups;
  std::map<std::pair<int, int>, std::vector<int>> homs;
};

/// The strong-semilattice product: carrier is the disjoint union of the
/// groups, numbered class-by-class (ascending class, then ascending
/// within-group index); x_a . y_b = hom(a,ab)(x) o hom(b,ab)(y) in G_{ab}.
/// Throws MathError on spec violations (non-semilattice, non-group,
/// non-homomorphism, missing hom, incoherent homs).
DecoratedGroupoid build_clifford(const StrongSemilatticeSpec& spec);

struct SlgDiagnosis {
  std::string reason;
  std::vector<int> witness;
};

/// True iff g is associative, every element lies in a subgroup (for each x
/// there is y with x*y = y*x and (x*y)*x = x), and idempotents commute.
/// On false, `diag` names the first failing condition and a witness.
bool is_slg(const Groupoid& g, SlgDiagnosis* diag = nullptr);

struct Decomposition {
  DecoratedGroupoid decorated;   // the input, now decorated
  StrongSemilatticeSpec spec;    // recovered generative description
  std::vector<int> renumbering;  // input element -> canonical element
};

/// Decomposes an SLG table into its maximal subgroups H_e, the induced
/// semilattice on idempotents, and the linking homs x -> x*e_b. Classes are
/// ordered by ascending least member; within a class, carrier order is
/// kept. build_clifford(spec) reproduces the table under `renumbering`.
/// Throws NotAnSlg when is_slg fails.
Decomposition decompose_slg(const Groupoid& g);

/// inv(x) = the group inverse of x within its class.
InverseMap slg_inverse_map(const DecoratedGroupoid& dg);

}  // namespace slg
