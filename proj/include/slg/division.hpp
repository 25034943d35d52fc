#pragma once

#include <optional>

#include "slg/clifford.hpp"
#include "slg/report.hpp"
#include "slg/ward.hpp"

namespace slg {

enum class DivisionKind { right, left, double_division };

std::string to_string(DivisionKind k);
DivisionKind division_kind_from_string(const std::string& s);

/// Division on a decorated semilattice of groups: x*y = x.inv(y) (right),
/// inv(x).y (left), inv(x).inv(y) (double), with inv the within-class group
/// inverse. Carrier and decoration are unchanged. The law battery for the
/// kind is asserted on the result; a failure there is a logic error.
DecoratedGroupoid divide(const DecoratedGroupoid& s, DivisionKind kind);

/// The inverse construction: x.y = x*(e_ab*y) (right), (x*e_ab)*y (left),
/// (e_ab*x)*(e_ab*y) (double), with e_ab the designated idempotent of the
/// meet class. Membership conditions for the kind are checked first; a
/// violation throws MembershipViolation with the failed law and witness.
/// The result is a decorated semilattice of groups on the same carrier.
DecoratedGroupoid reconstruct(const DecoratedGroupoid& dg, DivisionKind kind);

/// Membership conditions for a *given* decoration:
///   right:  classes are Ward quasigroups at their e, and 3.24 holds;
///   left:   classes are Ward duals at their e, and 3.84 holds;
///   double: classes are double Ward with e admissible, the designated
///           idempotents form a semilattice matching the class table
///           (the 3.131 hypothesis), and 3.133 + 3.134 hold.
Report membership_report(const DecoratedGroupoid& dg, DivisionKind kind);

/// Full post-division law battery (hand-coded scans, engine-independent):
/// 3.21-3.26 for right, 3.81-3.86 for left, 3.131-3.134 for double.
Report lemma_suite(const DecoratedGroupoid& divided, DivisionKind kind);

/// One hand-coded law scan by name: 3.24, 3.25, 3.26, 3.84, 3.85, 3.86,
/// 3.133, 3.134, or e-products (e_a * e_b = e_{ab}).
CheckResult check_division_law(const DecoratedGroupoid& dg,
                               const std::string& name);

/// Decides membership in SLWQ / SLWDQ / SLDWQ for a bare table and
/// synthesizes a witnessing decoration, or returns absent.
///   right/left: classes are recovered from squares (x*x is the local
///   identity), so no search is needed.
///   double: searches subsets D of E(S,*) closed under *, assigning each x
///   to the e in D whose fix-set {x : e*(e*x) = x} is inclusion-minimal
///   among those containing x. Soundness comes from the final
///   reconstruct-then-divide equality; subsets are visited by size then
///   lexicographic order, so the result is deterministic.
std::optional<DecoratedGroupoid> check_membership(const Groupoid& g,
                                                  DivisionKind kind);

/// For a semilattice of Ward quasigroups satisfying 3.24 (precondition,
/// else MathError): E(S,*) is exactly the designated idempotents, their
/// products realize the class meets, and e_a -> a is an isomorphism onto
/// the class semilattice.
Report verify_result_12(const DecoratedGroupoid& dg);

/// Mirror of verify_result_12 for Ward duals under 3.84.
Report verify_result_13(const DecoratedGroupoid& dg);

/// For a semilattice of double Ward quasigroups (precondition, else
/// MathError): the three-way equivalence between (1) the designated
/// idempotents forming a semilattice isomorphic to the class table,
/// (2) the idempotent law (ea*eb)*(es*ec) = eb*((ec*es)*ea), and
/// (3) e_a -> a being an isomorphism. Reports which hold and asserts
/// all-or-none.
Report verify_result_14(const DecoratedGroupoid& dg);

/// Exact round trips both ways: reconstruct(divide(s)) = s on the
/// semilattice-of-groups side, divide(reconstruct(q)) = q on the quasigroup
/// side. Each direction runs when its side's precondition holds; if
/// neither holds, throws MembershipViolation.
Report roundtrip_theorem(const DecoratedGroupoid& dg, DivisionKind kind);

/// Duality closure: dual of an SLG is an SLG; the dual of a right-division
/// member is a left-division member and conversely; double-division
/// membership is self-dual; left members satisfy the four-variable dual
/// transitivity law. Inapplicable parts are recorded, not errors.
Report duality_theorems(const DecoratedGroupoid& dg);

enum class BijectionDirection { to_slwq, to_sldwq };

/// x o y = (e_ab * x) * y maps right-division members to double-division
/// members and back; the two composites are the identity (exact tables).
DecoratedGroupoid slwq_sldwq_bijection(const DecoratedGroupoid& dg,
                                       BijectionDirection dir);

}  // namespace slg
