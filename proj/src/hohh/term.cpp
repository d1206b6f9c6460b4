#include "lf2hh/hohh/term.hpp"

#include <cassert>

#include "lf2hh/error.hpp"

namespace lf2hh::hohh {

struct HTerm::Node {
  TermKind kind;
  std::string name;  // constant/meta name, abs hint
  std::size_t id = 0;  // meta id, bvar index
  std::uint32_t level = 0;
  SimpleType type;
  HTerm sub;  // abs body, app head
  std::vector<HTerm> args;
};

TermKind HTerm::kind() const { return node_->kind; }
const std::string& HTerm::name() const { return node_->name; }
const SimpleType& HTerm::type() const { return node_->type; }
std::uint32_t HTerm::level() const { return node_->level; }
std::size_t HTerm::id() const { return node_->id; }
std::size_t HTerm::index() const { return node_->id; }
const std::string& HTerm::hint() const { return node_->name; }
const HTerm& HTerm::body() const { return node_->sub; }
const HTerm& HTerm::head() const { return node_->sub; }
const std::vector<HTerm>& HTerm::args() const { return node_->args; }

HTerm hconst(std::string name, SimpleType type, std::uint32_t level) {
  return HTerm{std::make_shared<const HTerm::Node>(
      HTerm::Node{TermKind::constant, std::move(name), 0, level, std::move(type), {}, {}})};
}

HTerm hmeta(std::size_t id, std::string name, SimpleType type, std::uint32_t level) {
  return HTerm{std::make_shared<const HTerm::Node>(
      HTerm::Node{TermKind::meta, std::move(name), id, level, std::move(type), {}, {}})};
}

HTerm hbvar(std::size_t index) {
  return HTerm{std::make_shared<const HTerm::Node>(
      HTerm::Node{TermKind::bvar, "", index, 0, {}, {}, {}})};
}

HTerm habs(SimpleType type, std::string hint, HTerm body) {
  return HTerm{std::make_shared<const HTerm::Node>(HTerm::Node{
      TermKind::abs, std::move(hint), 0, 0, std::move(type), std::move(body), {}})};
}

HTerm happ_raw(HTerm head, std::vector<HTerm> args) {
  if (args.empty()) return head;
  if (head.is(TermKind::app)) {
    std::vector<HTerm> merged = head.args();
    merged.insert(merged.end(), args.begin(), args.end());
    return happ_raw(head.head(), std::move(merged));
  }
  return HTerm{std::make_shared<const HTerm::Node>(
      HTerm::Node{TermKind::app, "", 0, 0, {}, std::move(head), std::move(args)})};
}

HTerm happ(const HTerm& head, std::span<const HTerm> args) {
  HTerm h = head;
  std::size_t i = 0;
  while (i < args.size() && h.is(TermKind::abs)) {
    h = instantiate(h.body(), args[i]);
    ++i;
  }
  if (i == args.size()) return h;
  return happ_raw(h, std::vector<HTerm>(args.begin() + static_cast<std::ptrdiff_t>(i), args.end()));
}

HTerm happ(const HTerm& head, std::initializer_list<HTerm> args) {
  return happ(head, std::span<const HTerm>(args.begin(), args.size()));
}

const HTerm& head_of(const HTerm& t) { return t.is(TermKind::app) ? t.head() : t; }

std::span<const HTerm> args_of(const HTerm& t) {
  if (t.is(TermKind::app)) return std::span<const HTerm>(t.args());
  return {};
}

namespace {

template <typename Leaf>
HTerm map_bvars(const HTerm& t, std::size_t depth, const Leaf& leaf) {
  switch (t.kind()) {
    case TermKind::constant:
    case TermKind::meta:
      return t;
    case TermKind::bvar:
      return leaf(t, depth);
    case TermKind::abs: {
      HTerm b = map_bvars(t.body(), depth + 1, leaf);
      if (b.same_node(t.body())) return t;
      return habs(t.type(), t.hint(), b);
    }
    case TermKind::app: {
      HTerm h = map_bvars(t.head(), depth, leaf);
      bool changed = !h.same_node(t.head());
      std::vector<HTerm> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) {
        args.push_back(map_bvars(a, depth, leaf));
        changed = changed || !args.back().same_node(a);
      }
      if (!changed) return t;
      return happ(h, args);
    }
  }
  return t;
}

}  // namespace

HTerm shift(const HTerm& t, std::ptrdiff_t delta, std::size_t cutoff) {
  if (delta == 0) return t;
  return map_bvars(t, 0, [&](const HTerm& b, std::size_t depth) {
    if (b.index() < cutoff + depth) return b;
    auto idx = static_cast<std::ptrdiff_t>(b.index()) + delta;
    assert(idx >= 0);
    return hbvar(static_cast<std::size_t>(idx));
  });
}

HTerm instantiate(const HTerm& body, const HTerm& value) {
  return map_bvars(body, 0, [&](const HTerm& b, std::size_t depth) {
    if (b.index() == depth) return shift(value, static_cast<std::ptrdiff_t>(depth));
    if (b.index() > depth) return hbvar(b.index() - 1);
    return b;
  });
}

HTerm instantiate_bvars(const HTerm& t, std::span<const HTerm> values, std::size_t depth) {
  if (values.empty()) return t;
  const std::size_t n = values.size();
  return map_bvars(t, depth, [&](const HTerm& b, std::size_t d) {
    if (b.index() < d) return b;
    std::size_t j = b.index() - d;
    if (j < n) return shift(values[j], static_cast<std::ptrdiff_t>(d));
    return hbvar(b.index() - n);
  });
}

bool alpha_equal(const HTerm& a, const HTerm& b) {
  if (a.same_node(b)) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::constant:
      return a.name() == b.name() && a.level() == b.level();
    case TermKind::meta:
      return a.id() == b.id();
    case TermKind::bvar:
      return a.index() == b.index();
    case TermKind::abs:
      return a.type() == b.type() && alpha_equal(a.body(), b.body());
    case TermKind::app: {
      if (a.args().size() != b.args().size()) return false;
      if (!alpha_equal(a.head(), b.head())) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!alpha_equal(a.args()[i], b.args()[i])) return false;
      return true;
    }
  }
  return false;
}

bool has_loose_bvar(const HTerm& t, std::size_t index) {
  switch (t.kind()) {
    case TermKind::bvar:
      return t.index() == index;
    case TermKind::abs:
      return has_loose_bvar(t.body(), index + 1);
    case TermKind::app:
      if (has_loose_bvar(t.head(), index)) return true;
      for (const auto& a : t.args())
        if (has_loose_bvar(a, index)) return true;
      return false;
    default:
      return false;
  }
}

namespace {

bool closed_from(const HTerm& t, std::size_t depth) {
  switch (t.kind()) {
    case TermKind::bvar:
      return t.index() < depth;
    case TermKind::abs:
      return closed_from(t.body(), depth + 1);
    case TermKind::app:
      if (!closed_from(t.head(), depth)) return false;
      for (const auto& a : t.args())
        if (!closed_from(a, depth)) return false;
      return true;
    default:
      return true;
  }
}

}  // namespace

bool is_closed(const HTerm& t) { return closed_from(t, 0); }

bool has_meta(const HTerm& t) {
  switch (t.kind()) {
    case TermKind::meta:
      return true;
    case TermKind::abs:
      return has_meta(t.body());
    case TermKind::app:
      if (has_meta(t.head())) return true;
      for (const auto& a : t.args())
        if (has_meta(a)) return true;
      return false;
    default:
      return false;
  }
}

bool is_beta_normal(const HTerm& t) {
  switch (t.kind()) {
    case TermKind::abs:
      return is_beta_normal(t.body());
    case TermKind::app:
      if (t.head().is(TermKind::abs)) return false;
      for (const auto& a : t.args())
        if (!is_beta_normal(a)) return false;
      return true;
    default:
      return true;
  }
}

std::size_t size(const HTerm& t) {
  switch (t.kind()) {
    case TermKind::abs:
      return 1 + size(t.body());
    case TermKind::app: {
      std::size_t n = 1 + size(t.head());
      for (const auto& a : t.args()) n += size(a);
      return n;
    }
    default:
      return 1;
  }
}

SimpleType type_of(const HTerm& t, std::vector<SimpleType>& env) {
  switch (t.kind()) {
    case TermKind::constant:
    case TermKind::meta:
      return t.type();
    case TermKind::bvar:
      if (t.index() >= env.size())
        throw SimpleTypeError("loose bound variable #" + std::to_string(t.index()));
      return env[env.size() - 1 - t.index()];
    case TermKind::abs: {
      env.push_back(t.type());
      SimpleType b = type_of(t.body(), env);
      env.pop_back();
      return arrow(t.type(), b);
    }
    case TermKind::app: {
      SimpleType ty = type_of(t.head(), env);
      for (const auto& a : t.args()) {
        if (!ty.is(TypeKind::arrow))
          throw SimpleTypeError("term of type " + to_string(ty) + " applied to an argument");
        SimpleType at = type_of(a, env);
        if (!(at == ty.domain()))
          throw SimpleTypeError("argument of type " + to_string(at) + " where " +
                                to_string(ty.domain()) + " is expected");
        ty = ty.codomain();
      }
      return ty;
    }
  }
  return {};
}

SimpleType type_of(const HTerm& t) {
  std::vector<SimpleType> env;
  return type_of(t, env);
}

HTerm eta_expand(const HTerm& t, const SimpleType& ty, std::vector<SimpleType>& env) {
  if (!ty.is(TypeKind::arrow)) return t;
  const SimpleType& dom = ty.domain();
  env.push_back(dom);
  HTerm x = eta_expand(hbvar(0), dom, env);
  HTerm body = eta_expand(happ(shift(t, 1), {x}), ty.codomain(), env);
  env.pop_back();
  return habs(dom, "x", body);
}

HTerm normalize(const HTerm& t, std::vector<SimpleType>& env) {
  switch (t.kind()) {
    case TermKind::abs: {
      env.push_back(t.type());
      HTerm b = normalize(t.body(), env);
      env.pop_back();
      return habs(t.type(), t.hint(), b);
    }
    case TermKind::app:
      if (t.head().is(TermKind::abs)) {
        // happ contracts the redex; normalize the arguments first so the
        // substituted values are already long.
        std::vector<HTerm> args;
        for (const auto& a : t.args()) args.push_back(normalize(a, env));
        return normalize(happ(normalize(t.head(), env), args), env);
      }
      [[fallthrough]];
    default: {
      std::span<const HTerm> old_args = args_of(t);
      std::vector<HTerm> args;
      args.reserve(old_args.size());
      bool changed = false;
      for (const auto& a : old_args) {
        args.push_back(normalize(a, env));
        changed = changed || !args.back().same_node(a);
      }
      // The head is atomic here, so the type follows from its arity alone.
      SimpleType ty = type_of(head_of(t), env);
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (!ty.is(TypeKind::arrow))
          throw SimpleTypeError("term of type " + to_string(ty) + " applied to an argument");
        ty = ty.codomain();
      }
      HTerm n = changed ? happ_raw(head_of(t), std::move(args)) : t;
      return eta_expand(n, ty, env);
    }
  }
}

HTerm normalize(const HTerm& t) {
  std::vector<SimpleType> env;
  return normalize(t, env);
}

}  // namespace lf2hh::hohh
