#ifndef LF2HH_HOHH_FORMULA_HPP
#define LF2HH_HOHH_FORMULA_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lf2hh/hohh/term.hpp"
#include "lf2hh/hohh/type.hpp"

namespace lf2hh::hohh {

enum class FormulaKind : std::uint8_t { top, atom, implies, forall };

// Formula binders share the de Bruijn numbering of the terms they contain:
// inside `forall`, bvar 0 of an atom refers to the quantified variable.
class Formula {
 public:
  Formula() = default;

  FormulaKind kind() const;
  bool is(FormulaKind k) const { return node_ && kind() == k; }
  explicit operator bool() const { return node_ != nullptr; }

  const HTerm& atom() const;
  const Formula& lhs() const;  // implies
  const Formula& rhs() const;  // implies
  const SimpleType& type() const;  // forall
  const std::string& hint() const;  // forall
  const Formula& body() const;  // forall

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  friend Formula top();
  friend Formula atom(HTerm a);
  friend Formula implies(Formula lhs, Formula rhs);
  friend Formula forall(SimpleType type, std::string hint, Formula body);

  std::shared_ptr<const Node> node_;
};

Formula top();
Formula atom(HTerm a);
Formula implies(Formula lhs, Formula rhs);
Formula forall(SimpleType type, std::string hint, Formula body);

Formula shift(const Formula& f, std::ptrdiff_t delta, std::size_t cutoff = 0);
// Replaces bvar 0 of a forall body with `value`.
Formula instantiate(const Formula& body, const HTerm& value);
// Formula counterpart of the term function of the same name.
Formula instantiate_bvars(const Formula& f, std::span<const HTerm> values,
                          std::size_t depth = 0);
bool alpha_equal(const Formula& a, const Formula& b);
bool is_closed(const Formula& f);
// Rewrites every `top => F` to `F`.
Formula simplify_top(const Formula& f);

// Goal grammar: top | A | D => G | pi x G.
bool is_goal(const Formula& f);
// Program-clause grammar: A | G => D | pi x D.
bool is_clause(const Formula& f);

struct Quantifier {
  std::string hint;
  SimpleType type;
};

struct Premise {
  Formula goal;
  // Number of quantifiers in scope: the premise's bvar 0 is quantifier
  // `scope - 1`.
  std::size_t scope;
};

// A program clause in backchaining form. The head lives under all the
// quantifiers; each premise under the ones preceding it.
struct Clause {
  std::vector<Quantifier> quants;
  std::vector<Premise> premises;
  HTerm head;

  // Name of the head's predicate constant.
  const std::string& predicate() const;
};

// Throws GrammarError when `d` is not a program clause or its head is not a
// constant-headed atom of type o.
Clause clausify(const Formula& d);
Formula unclausify(const Clause& c);

struct ConstDecl {
  std::string name;
  SimpleType type;
};

struct Program {
  std::vector<ConstDecl> signature;
  std::vector<Clause> clauses;

  const ConstDecl* find(const std::string& name) const;
};

}  // namespace lf2hh::hohh

#endif  // LF2HH_HOHH_FORMULA_HPP
