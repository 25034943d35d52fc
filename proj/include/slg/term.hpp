#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "slg/clifford.hpp"
#include "slg/report.hpp"

namespace slg {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Syntax tree over variables, the binary operation, unary inverse, the
/// designated idempotent of a term's class (local), the designated
/// idempotent of the meet of two terms' classes (meet), and named constants.
struct Term {
  enum class Kind { var, op, inv, local_id, meet_id, constant };
  Kind kind;
  std::string name;  // var / constant only
  TermPtr left;      // op, meet_id; sole child of inv, local_id
  TermPtr right;     // op, meet_id
};

TermPtr make_var(std::string name);
TermPtr make_const(std::string name);
TermPtr make_op(TermPtr l, TermPtr r);
TermPtr make_inv(TermPtr c);
TermPtr make_local(TermPtr c);
TermPtr make_meet(TermPtr l, TermPtr r);

/// Grammar (s-expressions):
///   term := var | "(" "*" term term ")" | "(" "inv" term ")"
///         | "(" "local" term ")" | "(" "meet" term term ")" | const
/// Atoms listed in `constants` parse as Const; everything else is a Var.
/// Throws InvalidInput with the offending position on syntax errors.
TermPtr parse_term(std::string_view text,
                   const std::set<std::string>& constants = {"e", "r"});

std::string print_term(const TermPtr& t);

/// A named law lhs = rhs, universally quantified over `variables` (scan
/// order; by construction, order of first appearance in lhs then rhs).
struct Identity {
  std::string name;
  TermPtr lhs;
  TermPtr rhs;
  std::vector<std::string> variables;

  bool uses_inv() const;
  bool uses_decoration() const;
  std::set<std::string> constants() const;
};

/// Parses "LHS = RHS" (a single top-level '='entry).
Identity parse_identity(std::string name, std::string_view lhs_eq_rhs,
                        const std::set<std::string>& constants = {"e", "r"});

/// Identity file: one identity per line, "name: lhs = rhs"; '#' comments
/// and blank lines ignored.
std::vector<Identity> parse_identity_file(std::istream& in);

struct EvalContext {
  const Decoration* decoration = nullptr;
  const InverseMap* inverses = nullptr;
  std::map<std::string, int> constants;
};

/// Bottom-up evaluation of one term under one assignment. Throws EvalError
/// ("missing-inverse-map", "missing-decoration", "unbound-const") when the
/// context lacks what the term needs, InvalidInput on unassigned variables.
int eval_term(const Term& t, const Groupoid& g,
              const std::map<std::string, int>& assignment,
              const EvalContext& ctx = {});

/// Scans all |g|^k assignments in lexicographic order over id.variables;
/// passes, or reports the least counterexample with both evaluated sides.
/// If the identity uses inv and the context has none, the groupoid's
/// unique-inverse map is computed (EvalError if absent).
CheckResult check_identity(const Identity& id, const Groupoid& g,
                           const EvalContext& ctx = {});

/// Least value for `constant` making the identity pass, or absent.
std::optional<int> exists_binding(const Identity& id, const Groupoid& g,
                                  const std::string& constant,
                                  EvalContext ctx = {});

/// The bundled law catalogue: (1)-(27), 3.24-3.26, 3.84-3.86, 3.133-3.134,
/// I, result13, result14-idem. Two-equation laws are split (16a/16b, ...).
const std::vector<Identity>& identity_corpus();
const Identity* find_identity(const std::string& name);
const std::string& identity_corpus_text();

}  // namespace slg
