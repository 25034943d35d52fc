#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "slg/errors.hpp"

namespace slg {

using Table = std::vector<std::vector<int>>;

/// A finite binary system on the carrier {0..n-1}, given by its Cayley
/// table: table[x][y] = x*y. Immutable after construction; the constructor
/// validates squareness, entry ranges, and label distinctness.
class Groupoid {
 public:
  explicit Groupoid(Table table, std::vector<std::string> labels = {});

  int size() const { return n_; }
  /// Bounds-checked product; throws InvalidInput on out-of-range indices.
  int apply(int x, int y) const;
  /// Unchecked product.
  int at(int x, int y) const { return table_[x][y]; }
  const Table& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Labels are presentation-only and excluded from equality.
  friend bool operator==(const Groupoid& a, const Groupoid& b) {
    return a.table_ == b.table_;
  }
  friend bool operator!=(const Groupoid& a, const Groupoid& b) {
    return !(a == b);
  }

 private:
  int n_;
  Table table_;
  std::vector<std::string> labels_;
};

/// A total map x -> x^{-1} in the unique-inverse sense:
/// (x*inv(x))*x = x and (inv(x)*x)*inv(x) = inv(x), inv(x) unique.
struct InverseMap {
  std::vector<int> inv;
};

/// Why inverse_map came back absent.
struct InverseDiagnostics {
  std::vector<int> no_inverse;  // elements with zero inverses
  std::vector<int> ambiguous;   // elements with two or more
};

/// A bijection b witnessing g1 ~ g2: b[x*y] = b[x] * b[y].
struct IsoWitness {
  std::vector<int> bijection;
};

/// Lexicographically least triple (x,y,z) with (x*y)*z != x*(y*z), if any.
std::optional<std::array<int, 3>> associativity_witness(const Groupoid& g);
bool is_associative(const Groupoid& g);

/// Elements with x*x = x, ascending.
std::vector<int> idempotents(const Groupoid& g);

/// True iff the table is a Latin square.
bool is_quasigroup(const Groupoid& g);

/// True iff idempotent, commutative and associative.
bool is_semilattice(const Groupoid& g);

/// The unique-inverse map when every element has exactly one inverse;
/// otherwise absent, with `diag` (if given) listing the offenders.
std::optional<InverseMap> inverse_map(const Groupoid& g,
                                      InverseDiagnostics* diag = nullptr);

/// Transposed table: x o y = y*x. Involution.
Groupoid dual(const Groupoid& g);

/// Lexicographically least isomorphism g1 -> g2, or absent.
std::optional<IsoWitness> find_isomorphism(const Groupoid& g1,
                                           const Groupoid& g2);

/// The sub-table on `subset` re-indexed over it, when closed; absent if not.
/// The subset is deduplicated and sorted; it must be nonempty and in range.
std::optional<Groupoid> restrict_to(const Groupoid& g,
                                    const std::vector<int>& subset);

// Group helpers. A group is decided as: quasigroup + associative.
bool is_group(const Groupoid& g);
int group_identity(const Groupoid& g);            // throws NotAGroup
std::vector<int> group_inverses(const Groupoid& g);  // throws NotAGroup
bool is_abelian_group(const Groupoid& g);

}  // namespace slg
