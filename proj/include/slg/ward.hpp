#pragma once

#include <optional>
#include <vector>

#include "slg/groupoid.hpp"

namespace slg {

enum class WardKind { ward, ward_dual, double_ward };

std::string to_string(WardKind k);

/// A recognized Ward-family quasigroup together with its distinguished
/// element: the right identity r (ward), the left identity r (ward_dual),
/// or the least admissible e (double_ward; `admissible` lists them all,
/// since e need not be unique).
struct WardStructure {
  Groupoid groupoid;
  int r;
  WardKind kind;
  std::vector<int> admissible;
};

/// Quasigroup satisfying right transitivity (x*z)*(y*z) = x*y.
/// The derived laws (unipotence, right identity, etc.) are re-checked and a
/// failure there throws std::logic_error, since they are consequences.
std::optional<WardStructure> is_ward(const Groupoid& g);

/// Mirror recognizer for (z*x)*(z*y) = x*y with a left identity.
std::optional<WardStructure> is_ward_dual(const Groupoid& g);

/// Quasigroup with some e satisfying [(e*e)*(x*z)]*[(e*y)*z] = x*y.
/// All admissible e are reported; derived laws checked for each.
std::optional<WardStructure> is_double_ward(const Groupoid& g);

// Group -> quasigroup constructions. All throw NotAGroup on a non-group.
Groupoid ward_from_group(const Groupoid& g);         // x*y = x o inv(y)
Groupoid ward_dual_from_group(const Groupoid& g);    // x*y = y o inv(x)
Groupoid double_ward_from_group(const Groupoid& g);  // x*y = inv(x) o inv(y)

// Quasigroup -> group constructions. The structure is re-validated and a
// mismatch throws MathError("malformed structure ...").
Groupoid group_from_ward(const WardStructure& w);       // x o y = x*(r*y)
Groupoid group_from_ward_dual(const WardStructure& w);  // x o y = (x*r)*y
/// x o y = (e*x)*(e*y); e defaults to the structure's least admissible.
Groupoid group_from_double_ward(const WardStructure& w,
                                std::optional<int> e = std::nullopt);

/// x . y = (r*x)*y turns a Ward quasigroup into a double Ward one (same e=r).
Groupoid ward_to_double_ward(const WardStructure& w);
/// x . y = (e*x)*y, the inverse map of ward_to_double_ward.
Groupoid double_ward_to_ward(const WardStructure& w,
                             std::optional<int> e = std::nullopt);

/// (x*y)*(z*w) = (x*z)*(y*w) for all assignments.
bool is_medial(const Groupoid& g);

}  // namespace slg
