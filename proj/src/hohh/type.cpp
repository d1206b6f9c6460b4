#include "lf2hh/hohh/type.hpp"

namespace lf2hh::hohh {

struct SimpleType::Node {
  TypeKind kind;
  SimpleType domain;
  SimpleType codomain;
};

TypeKind SimpleType::kind() const { return node_->kind; }
const SimpleType& SimpleType::domain() const { return node_->domain; }
const SimpleType& SimpleType::codomain() const { return node_->codomain; }

SimpleType lf_obj() {
  static const SimpleType t{std::make_shared<const SimpleType::Node>(
      SimpleType::Node{TypeKind::lf_obj, {}, {}})};
  return t;
}

SimpleType lf_type() {
  static const SimpleType t{std::make_shared<const SimpleType::Node>(
      SimpleType::Node{TypeKind::lf_type, {}, {}})};
  return t;
}

SimpleType prop() {
  static const SimpleType t{std::make_shared<const SimpleType::Node>(
      SimpleType::Node{TypeKind::prop, {}, {}})};
  return t;
}

SimpleType arrow(SimpleType a, SimpleType b) {
  return SimpleType{std::make_shared<const SimpleType::Node>(
      SimpleType::Node{TypeKind::arrow, std::move(a), std::move(b)})};
}

SimpleType arrows(const std::vector<SimpleType>& args, SimpleType result) {
  for (auto it = args.rbegin(); it != args.rend(); ++it) result = arrow(*it, result);
  return result;
}

bool operator==(const SimpleType& a, const SimpleType& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.kind() != b.kind()) return false;
  if (a.kind() != TypeKind::arrow) return true;
  return a.domain() == b.domain() && a.codomain() == b.codomain();
}

std::size_t arity(const SimpleType& t) {
  std::size_t n = 0;
  for (SimpleType cur = t; cur.is(TypeKind::arrow); cur = cur.codomain()) ++n;
  return n;
}

std::vector<SimpleType> arg_types(const SimpleType& t) {
  std::vector<SimpleType> out;
  for (SimpleType cur = t; cur.is(TypeKind::arrow); cur = cur.codomain())
    out.push_back(cur.domain());
  return out;
}

SimpleType target(const SimpleType& t) {
  SimpleType cur = t;
  while (cur.is(TypeKind::arrow)) cur = cur.codomain();
  return cur;
}

namespace {

bool mentions_prop(const SimpleType& t) {
  if (t.is(TypeKind::prop)) return true;
  if (t.is(TypeKind::arrow)) return mentions_prop(t.domain()) || mentions_prop(t.codomain());
  return false;
}

}  // namespace

bool prop_in_argument(const SimpleType& t) {
  if (!t.is(TypeKind::arrow)) return false;
  return mentions_prop(t.domain()) || prop_in_argument(t.codomain());
}

std::string to_string(const SimpleType& t) {
  switch (t.kind()) {
    case TypeKind::lf_obj:
      return "lf-obj";
    case TypeKind::lf_type:
      return "lf-type";
    case TypeKind::prop:
      return "o";
    case TypeKind::arrow: {
      std::string d = to_string(t.domain());
      if (t.domain().is(TypeKind::arrow)) d = "(" + d + ")";
      return d + " -> " + to_string(t.codomain());
    }
  }
  return "?";
}

}  // namespace lf2hh::hohh
