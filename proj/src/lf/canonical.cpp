#include "lf2hh/lf/canonical.hpp"

#include <vector>

#include "lf2hh/error.hpp"
#include "lf2hh/lf/print.hpp"

namespace lf2hh::lf {

namespace {

class Canon {
 public:
  explicit Canon(Scope& scope) : scope_(scope) {}

  Expr term(const Expr& e, const Expr& classifier) {
    if (classifier.is(ExprKind::pi)) {
      std::string x = fresh_name(e.is(ExprKind::lam) ? e.name() : classifier.name());
      Expr dom = classifier.domain();
      Expr body_class = beta_normalize(open(classifier.body(), x));
      Expr body = e.is(ExprKind::lam) ? open(e.body(), x)
                                      : app(e, var(x));
      scope_.push(x, dom);
      Expr out = term(body, body_class);
      scope_.pop();
      std::string hint = e.is(ExprKind::lam) ? e.name() : classifier.name();
      return lam(display_root(hint), type_or_kind(dom), abstract(out, x));
    }
    if (e.is(ExprKind::pi)) {
      if (!classifier.is(ExprKind::type))
        throw ClassifierError("type " + to_string(e) + " used where " +
                              to_string(classifier) + " is expected");
      return type_or_kind(e);
    }
    if (e.is(ExprKind::lam))
      throw ClassifierError("abstraction " + to_string(e) +
                            " does not fit non-functional classifier " +
                            to_string(classifier));
    Expr actual;
    Expr out = neutral(e, actual);
    if (!equal_upto_eta(actual, classifier))
      throw ClassifierError(to_string(e) + " has classifier " + to_string(actual) +
                            ", expected " + to_string(classifier));
    return out;
  }

  // Types and kinds: Pi binders are opened, base families canonicalized.
  Expr type_or_kind(const Expr& e) {
    switch (e.kind()) {
      case ExprKind::type:
        return e;
      case ExprKind::pi: {
        Expr dom = type_or_kind(e.domain());
        std::string x = fresh_name(e.name());
        scope_.push(x, dom);
        Expr body = type_or_kind(beta_normalize(open(e.body(), x)));
        scope_.pop();
        return pi(display_root(e.name()), dom, abstract(body, x));
      }
      case ExprKind::var:
      case ExprKind::app: {
        Expr actual;
        Expr out = neutral(e, actual);
        if (!actual.is(ExprKind::type))
          throw ClassifierError("type family " + to_string(e) +
                                " is not fully applied (kind " + to_string(actual) + ")");
        return out;
      }
      default:
        throw ClassifierError(to_string(e) + " is not a type or kind");
    }
  }

 private:
  // A head variable applied to arguments; `actual` receives its classifier.
  Expr neutral(const Expr& e, Expr& actual) {
    Spine s = spine(e);
    if (!s.head.is(ExprKind::var))
      throw ClassifierError("expression " + to_string(e) + " is not in normal form");
    const Entry* entry = scope_.find(s.head.name());
    if (!entry) throw UnboundVariable(s.head.name());
    Expr cls = entry->classifier;
    Expr out = s.head;
    for (const auto& arg : s.args) {
      if (!cls.is(ExprKind::pi))
        throw ClassifierError(s.head.name() + " is applied to too many arguments in " +
                              to_string(e));
      Expr a = term(arg, cls.domain());
      out = app(out, a);
      cls = beta_normalize(instantiate(cls.body(), a));
    }
    actual = cls;
    return out;
  }

  Scope& scope_;
};

bool canonical_rec(const Expr& e, std::vector<std::size_t>& arities,
                   const Context& ctx) {
  switch (e.kind()) {
    case ExprKind::type:
      return true;
    case ExprKind::pi:
    case ExprKind::lam: {
      if (!canonical_rec(e.domain(), arities, ctx)) return false;
      arities.push_back(pi_prefix_length(e.domain()));
      bool ok = canonical_rec(e.body(), arities, ctx);
      arities.pop_back();
      return ok;
    }
    case ExprKind::var:
    case ExprKind::bvar:
    case ExprKind::app: {
      Spine s = spine(e);
      std::size_t need = 0;
      if (s.head.is(ExprKind::var)) {
        const Entry* entry = ctx.find(s.head.name());
        if (!entry) throw UnboundVariable(s.head.name());
        need = pi_prefix_length(entry->classifier);
      } else if (s.head.is(ExprKind::bvar)) {
        if (s.head.index() >= arities.size()) return false;
        need = arities[arities.size() - 1 - s.head.index()];
      } else {
        return false;  // beta-redex or ill-formed head
      }
      if (s.args.size() != need) return false;
      for (const auto& a : s.args)
        if (!canonical_rec(a, arities, ctx)) return false;
      return true;
    }
  }
  return false;
}

}  // namespace

Expr canonicalize(const Expr& e, const Expr& classifier, Scope& scope) {
  Canon c(scope);
  if (is_kind_expr(e)) return c.type_or_kind(e);
  return c.term(beta_normalize(e), beta_normalize(classifier));
}

Expr canonicalize(const Expr& e, const Expr& classifier, const Context& ctx) {
  Scope scope(ctx);
  return canonicalize(e, classifier, scope);
}

Expr canonicalize_classifier(const Expr& e, Scope& scope) {
  Canon c(scope);
  return c.type_or_kind(beta_normalize(e));
}

Expr canonicalize_classifier(const Expr& e, const Context& ctx) {
  Scope scope(ctx);
  return canonicalize_classifier(e, scope);
}

Context canonicalize_context(const Context& ctx) {
  Context out;
  for (const auto& entry : ctx.entries())
    out.add(entry.name, canonicalize_classifier(entry.classifier, out));
  return out;
}

bool is_canonical(const Expr& e, const Context& ctx) {
  if (!is_beta_normal(e)) {
    // Still report unbound names before answering.
    for (const auto& n : free_vars(e))
      if (!ctx.contains(n)) throw UnboundVariable(n);
    return false;
  }
  std::vector<std::size_t> arities;
  return canonical_rec(e, arities, ctx);
}

bool is_canonical(const Context& ctx) {
  Context prefix;
  for (const auto& entry : ctx.entries()) {
    if (!is_canonical(entry.classifier, prefix)) return false;
    prefix.add(entry.name, entry.classifier);
  }
  return true;
}

}  // namespace lf2hh::lf
