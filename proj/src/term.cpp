#include "slg/term.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

namespace slg {

TermPtr make_var(std::string name) {
  return std::make_shared<Term>(Term{Term::Kind::var, std::move(name), {}, {}});
}
TermPtr make_const(std::string name) {
  return std::make_shared<Term>(
      Term{Term::Kind::constant, std::move(name), {}, {}});
}
TermPtr make_op(TermPtr l, TermPtr r) {
  return std::make_shared<Term>(
      Term{Term::Kind::op, {}, std::move(l), std::move(r)});
}
TermPtr make_inv(TermPtr c) {
  return std::make_shared<Term>(Term{Term::Kind::inv, {}, std::move(c), {}});
}
TermPtr make_local(TermPtr c) {
  return std::make_shared<Term>(
      Term{Term::Kind::local_id, {}, std::move(c), {}});
}
TermPtr make_meet(TermPtr l, TermPtr r) {
  return std::make_shared<Term>(
      Term{Term::Kind::meet_id, {}, std::move(l), std::move(r)});
}

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;
  const std::set<std::string>& constants;

  [[noreturn]] void error(const std::string& what) const {
    throw InvalidInput("syntax error at position " + std::to_string(pos) +
                       ": " + what);
  }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  std::string atom() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_' || text[pos] == '.' || text[pos] == '-' ||
            text[pos] == '*')) {
      ++pos;
    }
    if (pos == start) error("expected an atom");
    return std::string(text.substr(start, pos - start));
  }
  TermPtr term() {
    skip_ws();
    if (pos >= text.size()) error("unexpected end of input");
    if (text[pos] != '(') {
      std::string a = atom();
      if (a == "*") error("'*' is an operator, not an atom");
      if (constants.count(a)) return make_const(a);
      return make_var(a);
    }
    ++pos;  // '('
    std::string head = atom();
    TermPtr result;
    if (head == "*") {
      TermPtr l = term();
      TermPtr r = term();
      result = make_op(std::move(l), std::move(r));
    } else if (head == "inv") {
      result = make_inv(term());
    } else if (head == "local") {
      result = make_local(term());
    } else if (head == "meet") {
      TermPtr l = term();
      TermPtr r = term();
      result = make_meet(std::move(l), std::move(r));
    } else {
      error("unknown operator '" + head + "'");
    }
    skip_ws();
    if (pos >= text.size() || text[pos] != ')') error("expected ')'");
    ++pos;
    return result;
  }
};

void collect_vars(const Term& t, std::vector<std::string>& out) {
  switch (t.kind) {
    case Term::Kind::var:
      for (const auto& v : out)
        if (v == t.name) return;
      out.push_back(t.name);
      return;
    case Term::Kind::constant:
      return;
    case Term::Kind::inv:
    case Term::Kind::local_id:
      collect_vars(*t.left, out);
      return;
    case Term::Kind::op:
    case Term::Kind::meet_id:
      collect_vars(*t.left, out);
      collect_vars(*t.right, out);
      return;
  }
}

bool term_uses(const Term& t, Term::Kind k) {
  if (t.kind == k) return true;
  if (t.left && term_uses(*t.left, k)) return true;
  if (t.right && term_uses(*t.right, k)) return true;
  return false;
}

void collect_consts(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::constant) out.insert(t.name);
  if (t.left) collect_consts(*t.left, out);
  if (t.right) collect_consts(*t.right, out);
}

}  // namespace

TermPtr parse_term(std::string_view text, const std::set<std::string>& constants) {
  Parser p{text, 0, constants};
  TermPtr t = p.term();
  if (!p.at_end()) p.error("trailing input after term");
  return t;
}

std::string print_term(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::var:
    case Term::Kind::constant:
      return t->name;
    case Term::Kind::op:
      return "(* " + print_term(t->left) + " " + print_term(t->right) + ")";
    case Term::Kind::inv:
      return "(inv " + print_term(t->left) + ")";
    case Term::Kind::local_id:
      return "(local " + print_term(t->left) + ")";
    case Term::Kind::meet_id:
      return "(meet " + print_term(t->left) + " " + print_term(t->right) + ")";
  }
  return "?";
}

bool Identity::uses_inv() const {
  return term_uses(*lhs, Term::Kind::inv) || term_uses(*rhs, Term::Kind::inv);
}

bool Identity::uses_decoration() const {
  return term_uses(*lhs, Term::Kind::local_id) ||
         term_uses(*lhs, Term::Kind::meet_id) ||
         term_uses(*rhs, Term::Kind::local_id) ||
         term_uses(*rhs, Term::Kind::meet_id);
}

std::set<std::string> Identity::constants() const {
  std::set<std::string> out;
  collect_consts(*lhs, out);
  collect_consts(*rhs, out);
  return out;
}

Identity parse_identity(std::string name, std::string_view lhs_eq_rhs,
                        const std::set<std::string>& constants) {
  // split at the unique top-level '='
  int depth = 0;
  size_t split = std::string_view::npos;
  for (size_t i = 0; i < lhs_eq_rhs.size(); ++i) {
    char c = lhs_eq_rhs[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '=' && depth == 0) {
      if (split != std::string_view::npos)
        throw InvalidInput("identity '" + name + "': more than one '='");
      split = i;
    }
  }
  if (split == std::string_view::npos)
    throw InvalidInput("identity '" + name + "': missing '='");
  Identity id;
  id.name = std::move(name);
  id.lhs = parse_term(lhs_eq_rhs.substr(0, split), constants);
  id.rhs = parse_term(lhs_eq_rhs.substr(split + 1), constants);
  collect_vars(*id.lhs, id.variables);
  collect_vars(*id.rhs, id.variables);
  return id;
}

std::vector<Identity> parse_identity_file(std::istream& in) {
  std::vector<Identity> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw InvalidInput("identity file line " + std::to_string(lineno) +
                         ": missing name tag");
    std::string name = line.substr(start, colon - start);
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t'))
      name.pop_back();
    out.push_back(parse_identity(name, std::string_view(line).substr(colon + 1)));
  }
  return out;
}

namespace {

// Stack-machine compilation so corpus-wide quantifier scans stay cheap.
struct Ins {
  enum class Op { push_var, push_const, mul, invert, local, meet };
  Op op;
  int arg = 0;
};

struct Program {
  std::vector<Ins> code;
  int stack_need() const {
    int depth = 0, peak = 0;
    for (const Ins& ins : code) {
      if (ins.op == Ins::Op::push_var || ins.op == Ins::Op::push_const)
        ++depth;
      else if (ins.op == Ins::Op::mul || ins.op == Ins::Op::meet)
        --depth;
      peak = std::max(peak, depth);
    }
    return peak;
  }
};

void compile_term(const Term& t, const std::vector<std::string>& vars,
                  const EvalContext& ctx, Program& prog) {
  switch (t.kind) {
    case Term::Kind::var: {
      int slot = -1;
      for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == t.name) slot = static_cast<int>(i);
      if (slot < 0)
        throw InvalidInput("unassigned variable '" + t.name + "'");
      prog.code.push_back({Ins::Op::push_var, slot});
      return;
    }
    case Term::Kind::constant: {
      auto it = ctx.constants.find(t.name);
      if (it == ctx.constants.end())
        throw EvalError("unbound-const: '" + t.name + "'");
      prog.code.push_back({Ins::Op::push_const, it->second});
      return;
    }
    case Term::Kind::op:
      compile_term(*t.left, vars, ctx, prog);
      compile_term(*t.right, vars, ctx, prog);
      prog.code.push_back({Ins::Op::mul});
      return;
    case Term::Kind::inv:
      compile_term(*t.left, vars, ctx, prog);
      prog.code.push_back({Ins::Op::invert});
      return;
    case Term::Kind::local_id:
      if (!ctx.decoration) throw EvalError("missing-decoration");
      compile_term(*t.left, vars, ctx, prog);
      prog.code.push_back({Ins::Op::local});
      return;
    case Term::Kind::meet_id:
      if (!ctx.decoration) throw EvalError("missing-decoration");
      compile_term(*t.left, vars, ctx, prog);
      compile_term(*t.right, vars, ctx, prog);
      prog.code.push_back({Ins::Op::meet});
      return;
  }
}

int run(const Program& prog, const Groupoid& g, const std::vector<int>& slots,
        const Decoration* deco, const std::vector<int>* inv, int* stack) {
  const Table& t = g.table();
  int sp = 0;
  for (const Ins& ins : prog.code) {
    switch (ins.op) {
      case Ins::Op::push_var:
        stack[sp++] = slots[ins.arg];
        break;
      case Ins::Op::push_const:
        stack[sp++] = ins.arg;
        break;
      case Ins::Op::mul: {
        int b = stack[--sp];
        int a = stack[--sp];
        stack[sp++] = t[a][b];
        break;
      }
      case Ins::Op::invert:
        stack[sp - 1] = (*inv)[stack[sp - 1]];
        break;
      case Ins::Op::local:
        stack[sp - 1] = deco->e_of(stack[sp - 1]);
        break;
      case Ins::Op::meet: {
        int b = stack[--sp];
        int a = stack[--sp];
        stack[sp++] = deco->meet_e(a, b);
        break;
      }
    }
  }
  return stack[0];
}

// Resolves the inverse map an identity needs: the context's, else the
// groupoid's own unique-inverse map.
struct ResolvedInv {
  InverseMap owned;
  const std::vector<int>* ptr = nullptr;
};

ResolvedInv resolve_inverses(const Identity& id, const Groupoid& g,
                             const EvalContext& ctx) {
  ResolvedInv r;
  if (!id.uses_inv()) return r;
  if (ctx.inverses) {
    r.ptr = &ctx.inverses->inv;
    return r;
  }
  auto m = inverse_map(g);
  if (!m)
    throw EvalError("missing-inverse-map: groupoid has no unique-inverse map");
  r.owned = std::move(*m);
  r.ptr = &r.owned.inv;
  return r;
}

}  // namespace

int eval_term(const Term& t, const Groupoid& g,
              const std::map<std::string, int>& assignment,
              const EvalContext& ctx) {
  std::vector<std::string> vars;
  collect_vars(t, vars);
  std::vector<int> slots;
  for (const auto& v : vars) {
    auto it = assignment.find(v);
    if (it == assignment.end())
      throw InvalidInput("unassigned variable '" + v + "'");
    if (it->second < 0 || it->second >= g.size())
      throw InvalidInput("assignment out of range for '" + v + "'");
    slots.push_back(it->second);
  }
  Identity probe;
  probe.lhs = probe.rhs = std::make_shared<Term>(t);
  ResolvedInv inv = resolve_inverses(probe, g, ctx);
  if (ctx.decoration) validate_decoration(g, *ctx.decoration);
  Program prog;
  compile_term(t, vars, ctx, prog);
  std::vector<int> scratch(std::max(1, prog.stack_need()));
  return run(prog, g, slots, ctx.decoration, inv.ptr, scratch.data());
}

CheckResult check_identity(const Identity& id, const Groupoid& g,
                           const EvalContext& ctx) {
  if (id.uses_decoration() && !ctx.decoration)
    throw EvalError("missing-decoration");
  if (ctx.decoration) validate_decoration(g, *ctx.decoration);
  ResolvedInv inv = resolve_inverses(id, g, ctx);
  Program lhs, rhs;
  compile_term(*id.lhs, id.variables, ctx, lhs);
  compile_term(*id.rhs, id.variables, ctx, rhs);

  const int n = g.size();
  const int k = static_cast<int>(id.variables.size());
  std::vector<int> slots(k, 0);
  std::vector<int> scratch(std::max({1, lhs.stack_need(), rhs.stack_need()}));
  while (true) {
    int l = run(lhs, g, slots, ctx.decoration, inv.ptr, scratch.data());
    int r = run(rhs, g, slots, ctx.decoration, inv.ptr, scratch.data());
    if (l != r) {
      Witness w;
      w.check = id.name;
      for (int i = 0; i < k; ++i) w.assignment.emplace_back(id.variables[i], slots[i]);
      w.lhs = l;
      w.rhs = r;
      return CheckResult::fail(id.name, std::move(w));
    }
    int i = k - 1;
    while (i >= 0 && slots[i] == n - 1) slots[i--] = 0;
    if (i < 0) break;
    ++slots[i];
  }
  return CheckResult::pass(id.name);
}

std::optional<int> exists_binding(const Identity& id, const Groupoid& g,
                                  const std::string& constant,
                                  EvalContext ctx) {
  if (!id.constants().count(constant))
    throw InvalidInput("identity '" + id.name + "' does not mention constant '" +
                       constant + "'");
  for (int v = 0; v < g.size(); ++v) {
    ctx.constants[constant] = v;
    if (check_identity(id, g, ctx).passed) return v;
  }
  return std::nullopt;
}

// The bundled catalogue. Variables are x,y,z,w; named constants are e,r;
// (local t) is the designated idempotent of t's class and (meet s t) the
// one of the meet of the two classes. Two-equation laws are split with
// a/b suffixes, and I / result13 / result14-idem are aliases kept under
// their customary tags. In the 3.x family the element inverses are the
// class-local ones (e_a * x on the right-division side, x * e_a on the
// left), written with local terms, so those laws need a decoration.
static const char* kCorpusText = R"(# bundled identity catalogue
1: (* (* x z) (* y z)) = (* x y)
2: (* x x) = r
3: (* x r) = x
4: (* r (* x y)) = (* y x)
5: (* r (* r x)) = x
6: (* (* x y) z) = (* x (* z (* r y)))
7: (* (* z x) (* z y)) = (* x y)
8: (* x x) = r
9: (* r x) = x
10: (* x y) = (* (* y x) r)
11: (* (* x r) r) = x
12: (* x (* y z)) = (* (* (* y r) x) z)
13: (* (* (* e e) (* x z)) (* (* e y) z)) = (* x y)
14: (* e e) = e
15: (* (* e (* x z)) (* (* e y) z)) = (* x y)
16a: (* (* y x) y) = x
16b: (* y (* x y)) = x
17: (* e x) = (* x e)
18a: (* x (* x e)) = e
18b: (* (* e x) x) = e
19: (* x y) = (* e (* (* e y) (* e x)))
20: (* (* (local x) (local y)) (* (local z) (local w))) = (* (local y) (* (* (local w) (local z)) (local x)))
21: (* (* (local x) (local y)) (local z)) = (* (local y) (* (local z) (local x)))
22a: (* (* (local y) (local x)) (local y)) = (* (local x) (local y))
22b: (* (local x) (local y)) = (* (local x) (* (local y) (local x)))
23a: (meet x y) = (* (local x) (* (local x) (local y)))
23b: (meet x y) = (* (* (local y) (local x)) (* (local x) (local y)))
24: (* (meet x y) (local x)) = (meet x y)
25: (* (* (local x) (local y)) (meet x y)) = (* (local y) (local x))
26: (inv (* x y)) = (* (inv y) (inv x))
27: (* (local x) (local y)) = (meet x y)
I: (* (* x y) (* z w)) = (* (* x (* (* (local w) w) (* (local y) y))) z)
3.24: (* (* x y) (* z w)) = (* (* x (* (* (local w) w) (* (local y) y))) z)
3.25: (* x (* (meet x y) y)) = (* x (* (local y) y))
3.26: (* x y) = (* (local (* y x)) (* y x))
3.84: (* (* x y) (* z w)) = (* y (* (* (* z (local z)) (* x (local x))) w))
3.85: (* (* x (meet x y)) y) = (* (* x (local x)) y)
3.86: (* x y) = (* (* y x) (local (* y x)))
3.133: (* (* (meet (meet x y) z) (* (* (meet x y) x) (* (meet x y) y))) (* (meet (meet x y) z) z)) = (* (* (meet (meet x y) z) x) (* (meet (meet x y) z) (* (* (meet y z) y) (* (meet y z) z))))
3.134: (* (* (meet x y) (* (local x) x)) (* (meet x y) (* (local y) y))) = (* x y)
result13: (* (* x y) (* z w)) = (* y (* (* (* z (local z)) (* x (local x))) w))
result14-idem: (* (* (local x) (local y)) (* (local z) (local w))) = (* (local y) (* (* (local w) (local z)) (local x)))
)";

const std::string& identity_corpus_text() {
  static const std::string text = kCorpusText;
  return text;
}

const std::vector<Identity>& identity_corpus() {
  static const std::vector<Identity> corpus = [] {
    std::istringstream in(identity_corpus_text());
    return parse_identity_file(in);
  }();
  return corpus;
}

const Identity* find_identity(const std::string& name) {
  for (const auto& id : identity_corpus())
    if (id.name == name) return &id;
  return nullptr;
}

}  // namespace slg
