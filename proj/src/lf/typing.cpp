#include "lf2hh/lf/typing.hpp"

#include "lf2hh/error.hpp"
#include "lf2hh/lf/print.hpp"

namespace lf2hh::lf {

std::string CheckReport::message() const {
  if (ok) return "ok";
  return rule + ": cannot derive " + assertion + ": " + reason;
}

namespace {

struct Failure {
  std::string rule;
  std::string assertion;
  std::string reason;
};

class Checker {
 public:
  Checker(const Context& ctx, CheckOptions opts) : scope_(ctx), opts_(opts) {}

  std::vector<std::string> take_trace() { return std::move(trace_); }

  void kind_ok(const Expr& k) {
    switch (k.kind()) {
      case ExprKind::type:
        note("type-kind");
        return;
      case ExprKind::pi: {
        note("pi-kind");
        check_fam(k.domain(), type(), "pi-kind");
        Local x(*this, k);
        kind_ok(x.body);
        return;
      }
      default:
        fail("pi-kind", show(k) + " kind", "not a kind");
    }
  }

  Expr infer_fam(const Expr& a) {
    switch (a.kind()) {
      case ExprKind::var: {
        const Entry* e = scope_.find(a.name());
        if (!e) fail("var-fam", show(a) + " : ?", "unbound variable '" + a.name() + "'");
        if (e->kind != EntryKind::kind_assign)
          fail("var-fam", show(a) + " : ?", "'" + a.name() + "' is an object, not a type family");
        note("var-fam");
        return e->classifier;
      }
      case ExprKind::pi: {
        note("pi-fam");
        check_fam(a.domain(), type(), "pi-fam");
        Local x(*this, a);
        check_fam(x.body, type(), "pi-fam");
        return type();
      }
      case ExprKind::lam: {
        note("abs-fam");
        check_fam(a.domain(), type(), "abs-fam");
        Local x(*this, a);
        Expr k = infer_fam(x.body);
        return pi(a.name(), x.domain, abstract(k, x.name));
      }
      case ExprKind::app: {
        note("app-fam");
        Expr k = infer_fam(a.fn());
        if (!k.is(ExprKind::pi))
          fail("app-fam", show(a) + " : ?",
               "family " + show(a.fn()) + " of kind " + show(k) + " is applied to too many arguments");
        check_obj(a.arg(), k.domain(), "app-fam");
        return beta_normalize(instantiate(k.body(), a.arg()));
      }
      case ExprKind::bvar:
        fail("var-fam", show(a) + " : ?", "loose bound variable");
      case ExprKind::type:
        fail("var-fam", "type : ?", "type is a kind, not a type family");
    }
    return {};
  }

  void check_fam(const Expr& a, const Expr& k, const std::string& rule) {
    Expr actual = infer_fam(a);
    if (!equal_upto_eta(actual, k))
      fail(rule, show(a) + " : " + show(k), "it has kind " + show(actual));
  }

  Expr infer_obj(const Expr& m) {
    switch (m.kind()) {
      case ExprKind::var: {
        const Entry* e = scope_.find(m.name());
        if (!e) fail("var-obj", show(m) + " : ?", "unbound variable '" + m.name() + "'");
        if (e->kind != EntryKind::type_assign)
          fail("var-obj", show(m) + " : ?", "'" + m.name() + "' is a type family, not an object");
        note("var-obj");
        return e->classifier;
      }
      case ExprKind::lam: {
        note("abs-obj");
        check_fam(m.domain(), type(), "abs-obj");
        Local x(*this, m);
        Expr b = infer_obj(x.body);
        return pi(m.name(), x.domain, abstract(b, x.name));
      }
      case ExprKind::app: {
        note("app-obj");
        Expr t = infer_obj(m.fn());
        if (!t.is(ExprKind::pi))
          fail("app-obj", show(m) + " : ?",
               show(m.fn()) + " of type " + show(t) + " is applied to too many arguments");
        check_obj(m.arg(), t.domain(), "app-obj");
        return beta_normalize(instantiate(t.body(), m.arg()));
      }
      case ExprKind::bvar:
        fail("var-obj", show(m) + " : ?", "loose bound variable");
      case ExprKind::type:
      case ExprKind::pi:
        fail("var-obj", show(m) + " : ?", "a type or kind is not an object");
    }
    return {};
  }

  void check_obj(const Expr& m, const Expr& a, const std::string& rule) {
    Expr actual = infer_obj(m);
    if (!equal_upto_eta(actual, a))
      fail(rule, show(m) + " : " + show(a), "it has type " + show(actual));
  }

  [[noreturn]] void fail(const std::string& rule, const std::string& assertion,
                         const std::string& reason) {
    throw Failure{rule, assertion, reason};
  }

 private:
  // Opens the binder of a Pi or Lam for the duration of a scope.
  struct Local {
    Local(Checker& c, const Expr& binder)
        : checker(c),
          name(fresh_name(binder.name())),
          domain(beta_normalize(binder.domain())),
          body(open(binder.body(), name)) {
      checker.scope_.push(name, domain);
    }
    ~Local() { checker.scope_.pop(); }
    Local(const Local&) = delete;
    Local& operator=(const Local&) = delete;

    Checker& checker;
    std::string name;
    Expr domain;
    Expr body;
  };

  void note(const char* rule) {
    if (opts_.record_trace) trace_.emplace_back(rule);
  }

  static std::string show(const Expr& e) { return to_string(e); }

  Scope scope_;
  CheckOptions opts_;
  std::vector<std::string> trace_;
};

template <typename F>
CheckReport run(const Context& ctx, CheckOptions opts, F&& body) {
  Checker checker(ctx, opts);
  CheckReport report;
  try {
    body(checker);
  } catch (const Failure& f) {
    report.ok = false;
    report.rule = f.rule;
    report.assertion = f.assertion;
    report.reason = f.reason;
  } catch (const NonTerminationGuard& e) {
    report.ok = false;
    report.rule = "normalize";
    report.reason = e.what();
  }
  report.trace = checker.take_trace();
  return report;
}

}  // namespace

CheckReport check_context(const Context& ctx, CheckOptions opts) {
  CheckReport total;
  if (opts.record_trace) total.trace.emplace_back("null-ctx");
  Context prefix;
  for (const auto& entry : ctx.entries()) {
    const bool is_kind = entry.kind == EntryKind::kind_assign;
    const char* rule = is_kind ? "kind-ctx" : "type-ctx";
    if (prefix.contains(entry.name)) {
      CheckReport r;
      r.ok = false;
      r.rule = rule;
      r.assertion = entry.name + " not in dom(ctx)";
      r.reason = "DuplicateBinding: '" + entry.name + "' is declared twice";
      return r;
    }
    CheckReport r = run(prefix, opts, [&](Checker& c) {
      if (is_kind)
        c.kind_ok(entry.classifier);
      else
        c.check_fam(entry.classifier, type(), rule);
    });
    if (!r.ok) {
      r.reason = "in declaration of '" + entry.name + "': " + r.reason;
      return r;
    }
    if (opts.record_trace) {
      total.trace.emplace_back(rule);
      total.trace.insert(total.trace.end(), r.trace.begin(), r.trace.end());
    }
    prefix.add(entry.name, entry.classifier);
  }
  return total;
}

CheckReport check_kind(const Context& ctx, const Expr& k, CheckOptions opts) {
  return run(ctx, opts, [&](Checker& c) { c.kind_ok(k); });
}

CheckReport check_family(const Context& ctx, const Expr& a, const Expr& k,
                         CheckOptions opts) {
  return run(ctx, opts, [&](Checker& c) {
    c.check_fam(a, beta_normalize(k), a.is(ExprKind::app) ? "app-fam" : "var-fam");
  });
}

CheckReport check_type(const Context& ctx, const Expr& a, CheckOptions opts) {
  return check_family(ctx, a, type(), opts);
}

CheckReport check_object(const Context& ctx, const Expr& m, const Expr& a,
                         CheckOptions opts) {
  return run(ctx, opts, [&](Checker& c) {
    const char* rule = m.is(ExprKind::lam)   ? "abs-obj"
                       : m.is(ExprKind::app) ? "app-obj"
                                             : "var-obj";
    c.check_obj(m, beta_normalize(a), rule);
  });
}

Inferred infer_kind(const Context& ctx, const Expr& a, CheckOptions opts) {
  Inferred out;
  out.report = run(ctx, opts, [&](Checker& c) { out.classifier = c.infer_fam(a); });
  if (!out.report.ok) out.classifier = Expr{};
  return out;
}

Inferred infer_type(const Context& ctx, const Expr& m, CheckOptions opts) {
  Inferred out;
  out.report = run(ctx, opts, [&](Checker& c) { out.classifier = c.infer_obj(m); });
  if (!out.report.ok) out.classifier = Expr{};
  return out;
}

}  // namespace lf2hh::lf
