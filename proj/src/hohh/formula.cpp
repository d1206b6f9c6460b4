#include "lf2hh/hohh/formula.hpp"

#include "lf2hh/error.hpp"

namespace lf2hh::hohh {

struct Formula::Node {
  FormulaKind kind;
  HTerm atom;
  Formula lhs;  // implies lhs, forall body
  Formula rhs;
  SimpleType type;
  std::string hint;
};

FormulaKind Formula::kind() const { return node_->kind; }
const HTerm& Formula::atom() const { return node_->atom; }
const Formula& Formula::lhs() const { return node_->lhs; }
const Formula& Formula::rhs() const { return node_->rhs; }
const SimpleType& Formula::type() const { return node_->type; }
const std::string& Formula::hint() const { return node_->hint; }
const Formula& Formula::body() const { return node_->lhs; }

Formula top() {
  static const Formula t{std::make_shared<const Formula::Node>(
      Formula::Node{FormulaKind::top, {}, {}, {}, {}, {}})};
  return t;
}

Formula atom(HTerm a) {
  return Formula{std::make_shared<const Formula::Node>(
      Formula::Node{FormulaKind::atom, std::move(a), {}, {}, {}, {}})};
}

Formula implies(Formula lhs, Formula rhs) {
  return Formula{std::make_shared<const Formula::Node>(
      Formula::Node{FormulaKind::implies, {}, std::move(lhs), std::move(rhs), {}, {}})};
}

Formula forall(SimpleType type, std::string hint, Formula body) {
  return Formula{std::make_shared<const Formula::Node>(Formula::Node{
      FormulaKind::forall, {}, std::move(body), {}, std::move(type), std::move(hint)})};
}

Formula shift(const Formula& f, std::ptrdiff_t delta, std::size_t cutoff) {
  switch (f.kind()) {
    case FormulaKind::top:
      return f;
    case FormulaKind::atom:
      return atom(shift(f.atom(), delta, cutoff));
    case FormulaKind::implies:
      return implies(shift(f.lhs(), delta, cutoff), shift(f.rhs(), delta, cutoff));
    case FormulaKind::forall:
      return forall(f.type(), f.hint(), shift(f.body(), delta, cutoff + 1));
  }
  return f;
}

namespace {

bool closed_from(const Formula& f, std::size_t depth) {
  switch (f.kind()) {
    case FormulaKind::top:
      return true;
    case FormulaKind::atom: {
      HTerm t = f.atom();
      for (std::size_t i = 0; i < depth; ++i) t = habs(lf_obj(), "", t);
      return is_closed(t);
    }
    case FormulaKind::implies:
      return closed_from(f.lhs(), depth) && closed_from(f.rhs(), depth);
    case FormulaKind::forall:
      return closed_from(f.body(), depth + 1);
  }
  return true;
}

}  // namespace

Formula instantiate_bvars(const Formula& f, std::span<const HTerm> values,
                          std::size_t depth) {
  switch (f.kind()) {
    case FormulaKind::top:
      return f;
    case FormulaKind::atom:
      return atom(instantiate_bvars(f.atom(), values, depth));
    case FormulaKind::implies:
      return implies(instantiate_bvars(f.lhs(), values, depth),
                     instantiate_bvars(f.rhs(), values, depth));
    case FormulaKind::forall:
      return forall(f.type(), f.hint(), instantiate_bvars(f.body(), values, depth + 1));
  }
  return f;
}

Formula instantiate(const Formula& body, const HTerm& value) {
  return instantiate_bvars(body, std::span<const HTerm>(&value, 1));
}

bool alpha_equal(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormulaKind::top:
      return true;
    case FormulaKind::atom:
      return alpha_equal(a.atom(), b.atom());
    case FormulaKind::implies:
      return alpha_equal(a.lhs(), b.lhs()) && alpha_equal(a.rhs(), b.rhs());
    case FormulaKind::forall:
      return a.type() == b.type() && alpha_equal(a.body(), b.body());
  }
  return false;
}

bool is_closed(const Formula& f) { return closed_from(f, 0); }

Formula simplify_top(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::implies: {
      Formula r = simplify_top(f.rhs());
      if (f.lhs().is(FormulaKind::top)) return r;
      return implies(simplify_top(f.lhs()), r);
    }
    case FormulaKind::forall:
      return forall(f.type(), f.hint(), simplify_top(f.body()));
    default:
      return f;
  }
}

bool is_goal(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::top:
    case FormulaKind::atom:
      return true;
    case FormulaKind::implies:
      return is_clause(f.lhs()) && is_goal(f.rhs());
    case FormulaKind::forall:
      return is_goal(f.body());
  }
  return false;
}

bool is_clause(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::top:
      return false;
    case FormulaKind::atom:
      return true;
    case FormulaKind::implies:
      return is_goal(f.lhs()) && is_clause(f.rhs());
    case FormulaKind::forall:
      return is_clause(f.body());
  }
  return false;
}

const std::string& Clause::predicate() const { return head_of(head).name(); }

Clause clausify(const Formula& d) {
  Clause c;
  Formula cur = d;
  for (;;) {
    switch (cur.kind()) {
      case FormulaKind::forall:
        c.quants.push_back(Quantifier{cur.hint(), cur.type()});
        cur = cur.body();
        continue;
      case FormulaKind::implies:
        if (!is_goal(cur.lhs()))
          throw GrammarError("premise of a program clause is not a goal formula");
        c.premises.push_back(Premise{cur.lhs(), c.quants.size()});
        cur = cur.rhs();
        continue;
      case FormulaKind::atom: {
        const HTerm& h = head_of(cur.atom());
        if (!h.is(TermKind::constant))
          throw GrammarError("program clause head must have a constant predicate");
        if (!target(h.type()).is(TypeKind::prop))
          throw GrammarError("program clause head '" + h.name() + "' is not a proposition");
        c.head = cur.atom();
        return c;
      }
      case FormulaKind::top:
        throw GrammarError("top is a goal, not a program clause");
    }
  }
}

Formula unclausify(const Clause& c) {
  Formula f = atom(c.head);
  std::size_t q = c.quants.size();
  std::size_t p = c.premises.size();
  // Rebuild from the inside out: premises with scope s sit just inside the
  // s-th quantifier.
  while (q > 0 || p > 0) {
    if (p > 0 && c.premises[p - 1].scope == q) {
      f = implies(c.premises[p - 1].goal, f);
      --p;
    } else {
      --q;
      f = forall(c.quants[q].type, c.quants[q].hint, f);
    }
  }
  return f;
}

const ConstDecl* Program::find(const std::string& name) const {
  for (const auto& d : signature)
    if (d.name == name) return &d;
  return nullptr;
}

}  // namespace lf2hh::hohh
