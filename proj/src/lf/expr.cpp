#include "lf2hh/lf/expr.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "lf2hh/error.hpp"

namespace lf2hh::lf {

struct Expr::Node {
  ExprKind kind;
  std::string name;
  std::size_t index = 0;
  Expr a;  // pi domain, lam annotation, app function
  Expr b;  // pi/lam body, app argument
};

ExprKind Expr::kind() const { return node_->kind; }
const std::string& Expr::name() const { return node_->name; }
std::size_t Expr::index() const { return node_->index; }
const Expr& Expr::domain() const { return node_->a; }
const Expr& Expr::body() const { return node_->b; }
const Expr& Expr::fn() const { return node_->a; }
const Expr& Expr::arg() const { return node_->b; }

Expr type() {
  static const Expr t{std::make_shared<const Expr::Node>(
      Expr::Node{ExprKind::type, "", 0, {}, {}})};
  return t;
}

Expr var(std::string name) {
  return Expr{std::make_shared<const Expr::Node>(
      Expr::Node{ExprKind::var, std::move(name), 0, {}, {}})};
}

Expr bvar(std::size_t index) {
  return Expr{std::make_shared<const Expr::Node>(
      Expr::Node{ExprKind::bvar, "", index, {}, {}})};
}

Expr pi(std::string name, Expr domain, Expr body) {
  return Expr{std::make_shared<const Expr::Node>(Expr::Node{
      ExprKind::pi, std::move(name), 0, std::move(domain), std::move(body)})};
}

Expr lam(std::string name, Expr annot, Expr body) {
  return Expr{std::make_shared<const Expr::Node>(Expr::Node{
      ExprKind::lam, std::move(name), 0, std::move(annot), std::move(body)})};
}

Expr app(Expr fn, Expr arg) {
  return Expr{std::make_shared<const Expr::Node>(
      Expr::Node{ExprKind::app, "", 0, std::move(fn), std::move(arg)})};
}

Expr app(Expr fn, std::span<const Expr> args) {
  for (const auto& a : args) fn = app(std::move(fn), a);
  return fn;
}

Expr app(Expr fn, std::initializer_list<Expr> args) {
  return app(std::move(fn), std::span<const Expr>(args.begin(), args.size()));
}

Expr pi_over(const std::string& name, Expr domain, const Expr& body) {
  return pi(name, std::move(domain), abstract(body, name));
}

Expr lam_over(const std::string& name, Expr annot, const Expr& body) {
  return lam(name, std::move(annot), abstract(body, name));
}

Expr arrow(Expr domain, Expr codomain) {
  return pi("", std::move(domain), shift(codomain, 1));
}

Spine spine(const Expr& e) {
  Spine s;
  Expr cur = e;
  while (cur.is(ExprKind::app)) {
    s.args.push_back(cur.arg());
    cur = cur.fn();
  }
  s.head = cur;
  std::reverse(s.args.begin(), s.args.end());
  return s;
}

namespace {

// Generic structural rebuild helper: `leaf` handles var/bvar at the given
// binder depth; returns the same node when nothing changed.
Expr rebuild(const Expr& e, std::size_t depth,
             const std::function<Expr(const Expr&, std::size_t)>& leaf) {
  switch (e.kind()) {
    case ExprKind::type:
      return e;
    case ExprKind::var:
    case ExprKind::bvar:
      return leaf(e, depth);
    case ExprKind::pi:
    case ExprKind::lam: {
      Expr d = rebuild(e.domain(), depth, leaf);
      Expr b = rebuild(e.body(), depth + 1, leaf);
      if (d.same_node(e.domain()) && b.same_node(e.body())) return e;
      return e.kind() == ExprKind::pi ? pi(e.name(), d, b) : lam(e.name(), d, b);
    }
    case ExprKind::app: {
      Expr f = rebuild(e.fn(), depth, leaf);
      Expr a = rebuild(e.arg(), depth, leaf);
      if (f.same_node(e.fn()) && a.same_node(e.arg())) return e;
      return app(f, a);
    }
  }
  return e;
}

}  // namespace

Expr shift(const Expr& e, std::ptrdiff_t delta, std::size_t cutoff) {
  if (delta == 0) return e;
  return rebuild(e, 0, [&](const Expr& leaf, std::size_t depth) {
    if (leaf.is(ExprKind::bvar) && leaf.index() >= cutoff + depth) {
      auto idx = static_cast<std::ptrdiff_t>(leaf.index()) + delta;
      assert(idx >= 0);
      return bvar(static_cast<std::size_t>(idx));
    }
    return leaf;
  });
}

Expr instantiate(const Expr& body, const Expr& value) {
  return rebuild(body, 0, [&](const Expr& leaf, std::size_t depth) {
    if (!leaf.is(ExprKind::bvar)) return leaf;
    if (leaf.index() == depth) return shift(value, static_cast<std::ptrdiff_t>(depth));
    if (leaf.index() > depth) return bvar(leaf.index() - 1);
    return leaf;
  });
}

Expr open(const Expr& body, const std::string& name) {
  return instantiate(body, var(name));
}

Expr abstract(const Expr& e, const std::string& name) {
  return rebuild(e, 0, [&](const Expr& leaf, std::size_t depth) {
    if (leaf.is(ExprKind::bvar) && leaf.index() >= depth)
      return bvar(leaf.index() + 1);
    if (leaf.is(ExprKind::var) && leaf.name() == name) return bvar(depth);
    return leaf;
  });
}

Expr substitute(const Expr& e,
                std::span<const std::pair<std::string, Expr>> bindings) {
  if (bindings.empty()) return e;
  return rebuild(e, 0, [&](const Expr& leaf, std::size_t depth) {
    if (!leaf.is(ExprKind::var)) return leaf;
    for (const auto& [name, value] : bindings) {
      if (name == leaf.name())
        return shift(value, static_cast<std::ptrdiff_t>(depth));
    }
    return leaf;
  });
}

namespace {

void collect_free(const Expr& e, std::set<std::string>& out) {
  switch (e.kind()) {
    case ExprKind::var:
      out.insert(e.name());
      break;
    case ExprKind::pi:
    case ExprKind::lam:
      collect_free(e.domain(), out);
      collect_free(e.body(), out);
      break;
    case ExprKind::app:
      collect_free(e.fn(), out);
      collect_free(e.arg(), out);
      break;
    default:
      break;
  }
}

bool loose_at(const Expr& e, std::size_t index) {
  switch (e.kind()) {
    case ExprKind::bvar:
      return e.index() == index;
    case ExprKind::pi:
    case ExprKind::lam:
      return loose_at(e.domain(), index) || loose_at(e.body(), index + 1);
    case ExprKind::app:
      return loose_at(e.fn(), index) || loose_at(e.arg(), index);
    default:
      return false;
  }
}

bool closed_from(const Expr& e, std::size_t depth) {
  switch (e.kind()) {
    case ExprKind::bvar:
      return e.index() < depth;
    case ExprKind::pi:
    case ExprKind::lam:
      return closed_from(e.domain(), depth) && closed_from(e.body(), depth + 1);
    case ExprKind::app:
      return closed_from(e.fn(), depth) && closed_from(e.arg(), depth);
    default:
      return true;
  }
}

}  // namespace

std::set<std::string> free_vars(const Expr& e) {
  std::set<std::string> out;
  collect_free(e, out);
  return out;
}

bool occurs_free(const Expr& e, const std::string& name) {
  switch (e.kind()) {
    case ExprKind::var:
      return e.name() == name;
    case ExprKind::pi:
    case ExprKind::lam:
      return occurs_free(e.domain(), name) || occurs_free(e.body(), name);
    case ExprKind::app:
      return occurs_free(e.fn(), name) || occurs_free(e.arg(), name);
    default:
      return false;
  }
}

bool has_loose_bvar(const Expr& e, std::size_t index) { return loose_at(e, index); }

bool is_locally_closed(const Expr& e) { return closed_from(e, 0); }

bool alpha_equal(const Expr& a, const Expr& b) {
  if (a.same_node(b)) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ExprKind::type:
      return true;
    case ExprKind::var:
      return a.name() == b.name();
    case ExprKind::bvar:
      return a.index() == b.index();
    case ExprKind::pi:
    case ExprKind::lam:
      return alpha_equal(a.domain(), b.domain()) && alpha_equal(a.body(), b.body());
    case ExprKind::app:
      return alpha_equal(a.fn(), b.fn()) && alpha_equal(a.arg(), b.arg());
  }
  return false;
}

bool equal_upto_eta(const Expr& a, const Expr& b) {
  if (a.same_node(b)) return true;
  const bool la = a.is(ExprKind::lam);
  const bool lb = b.is(ExprKind::lam);
  if (la && lb) return equal_upto_eta(a.body(), b.body());
  if (la) return equal_upto_eta(a.body(), app(shift(b, 1), bvar(0)));
  if (lb) return equal_upto_eta(app(shift(a, 1), bvar(0)), b.body());
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ExprKind::type:
      return true;
    case ExprKind::var:
      return a.name() == b.name();
    case ExprKind::bvar:
      return a.index() == b.index();
    case ExprKind::pi:
      return equal_upto_eta(a.domain(), b.domain()) &&
             equal_upto_eta(a.body(), b.body());
    case ExprKind::app:
      return equal_upto_eta(a.fn(), b.fn()) && equal_upto_eta(a.arg(), b.arg());
    default:
      return false;
  }
}

namespace {

struct Normalizer {
  std::uint64_t fuel;

  void spend() {
    if (fuel == 0)
      throw NonTerminationGuard("beta normalization exceeded its contraction budget");
    --fuel;
  }

  Expr run(Expr e) {
    // Weak-head reduce iteratively so that looping terms consume fuel
    // instead of stack.
    for (;;) {
      Spine s = spine(e);
      if (s.head.is(ExprKind::lam) && !s.args.empty()) {
        spend();
        Expr reduced = instantiate(s.head.body(), s.args.front());
        e = app(reduced, std::span<const Expr>(s.args).subspan(1));
        continue;
      }
      switch (s.head.kind()) {
        case ExprKind::pi:
        case ExprKind::lam: {
          // args is empty for lam here; pi applied to arguments is ill-sorted
          // and left as is.
          Expr d = run(s.head.domain());
          Expr b = run(s.head.body());
          Expr h = s.head.is(ExprKind::pi) ? pi(s.head.name(), d, b)
                                           : lam(s.head.name(), d, b);
          return normalize_args(h, s.args);
        }
        default:
          return normalize_args(s.head, s.args);
      }
    }
  }

  Expr normalize_args(Expr head, const std::vector<Expr>& args) {
    for (const auto& a : args) head = app(head, run(a));
    return head;
  }
};

}  // namespace

Expr beta_normalize(const Expr& e, std::uint64_t fuel) {
  Normalizer n{fuel};
  return n.run(e);
}

bool is_beta_normal(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::pi:
    case ExprKind::lam:
      return is_beta_normal(e.domain()) && is_beta_normal(e.body());
    case ExprKind::app:
      if (e.fn().is(ExprKind::lam)) return false;
      return is_beta_normal(e.fn()) && is_beta_normal(e.arg());
    default:
      return true;
  }
}

std::size_t pi_prefix_length(const Expr& e) {
  std::size_t n = 0;
  for (Expr cur = e; cur.is(ExprKind::pi); cur = cur.body()) ++n;
  return n;
}

std::size_t size(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::pi:
    case ExprKind::lam:
      return 1 + size(e.domain()) + size(e.body());
    case ExprKind::app:
      return 1 + size(e.fn()) + size(e.arg());
    default:
      return 1;
  }
}

}  // namespace lf2hh::lf
