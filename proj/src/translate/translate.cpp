#include "lf2hh/translate/translate.hpp"

#include "lf2hh/error.hpp"
#include "lf2hh/hohh/formula.hpp"
#include "lf2hh/lf/print.hpp"
#include "lf2hh/translate/rigidity.hpp"

namespace lf2hh::translate {

using hohh::Formula;
using hohh::HTerm;
using hohh::SimpleType;

const char* to_string(Mode m) { return m == Mode::simple ? "simple" : "optimized"; }

Translator::Translator(const lf::Context& ctx, TranslateOptions opts)
    : ctx_(ctx), opts_(opts) {}

HTerm Translator::encode(const lf::Expr& e, const std::vector<Binder>& binders) const {
  return translate::encode(e, ctx_, binders);
}

HTerm Translator::hastype() {
  static const HTerm h = hohh::hconst(
      "hastype", hohh::arrow(hohh::lf_obj(), hohh::arrow(hohh::lf_type(), hohh::prop())), 0);
  return h;
}

HTerm Translator::predicate(const lf::Entry& family) const {
  std::vector<SimpleType> args;
  for (lf::Expr k = family.classifier; k.is(lf::ExprKind::pi); k = k.body())
    args.push_back(phi(k.domain()));
  if (opts_.proof_arg == ProofArg::first)
    args.insert(args.begin(), hohh::lf_obj());
  else
    args.push_back(hohh::lf_obj());
  return hohh::hconst(family.name, hohh::arrows(args, hohh::prop()), 0);
}

namespace {

// Opens the Pi binder of `a` as a new innermost binder and returns the
// pieces needed to build the quantifier.
struct Opened {
  std::string name;
  std::string hint;
  lf::Expr domain;
  lf::Expr body;
  SimpleType type;
  HTerm var;  // the bound variable, eta-long at `type`
};

Opened open_pi(const lf::Expr& a, std::vector<Binder>& binders) {
  Opened o;
  o.name = lf::fresh_name(a.name().empty() ? "x" : a.name());
  o.hint = binder_hint(a.name(), a.domain());
  o.domain = a.domain();
  o.body = lf::open(a.body(), o.name);
  o.type = phi(a.domain());
  std::vector<SimpleType> env{o.type};
  o.var = hohh::eta_expand(hohh::hbvar(0), o.type, env);
  binders.push_back(Binder{o.name, o.domain});
  return o;
}

HTerm apply_shifted(const HTerm& m, const HTerm& x) {
  return hohh::happ(hohh::shift(m, 1), {x});
}

}  // namespace

Formula Translator::base(const lf::Expr& a, const HTerm& m,
                         const std::vector<Binder>& binders) const {
  if (opts_.mode == Mode::simple)
    return hohh::atom(hohh::happ(hastype(), {m, encode(a, binders)}));
  lf::Spine s = lf::spine(a);
  if (!s.head.is(lf::ExprKind::var))
    throw CanonicityError("not a base type: " + lf::to_string(a));
  const lf::Entry* family = ctx_.find(s.head.name());
  if (!family || family->kind != lf::EntryKind::kind_assign)
    throw CanonicityError("base type headed by a non-family: " + lf::to_string(a));
  std::vector<HTerm> args;
  for (const auto& n : s.args) args.push_back(encode(n, binders));
  if (opts_.proof_arg == ProofArg::first)
    args.insert(args.begin(), m);
  else
    args.push_back(m);
  return hohh::atom(hohh::happ_raw(predicate(*family), std::move(args)));
}

Formula Translator::simple(const lf::Expr& a, const HTerm& m,
                           std::vector<Binder>& binders) const {
  if (!a.is(lf::ExprKind::pi)) return base(a, m, binders);
  Opened x = open_pi(a, binders);
  Formula hyp = simple(x.domain, x.var, binders);
  Formula rest = simple(x.body, apply_shifted(m, x.var), binders);
  binders.pop_back();
  return hohh::forall(x.type, x.hint, hohh::implies(hyp, rest));
}

Formula Translator::negative(const lf::Expr& a, const HTerm& m,
                             std::vector<Binder>& binders) const {
  if (!a.is(lf::ExprKind::pi)) return base(a, m, binders);
  Opened x = open_pi(a, binders);
  std::vector<std::string> fresh_gamma;
  Formula hyp = positive(x.domain, x.var, binders, fresh_gamma);
  Formula rest = negative(x.body, apply_shifted(m, x.var), binders);
  binders.pop_back();
  return hohh::forall(x.type, x.hint, hohh::implies(hyp, rest));
}

Formula Translator::positive(const lf::Expr& a, const HTerm& m,
                             std::vector<Binder>& binders,
                             std::vector<std::string>& pi_vars) const {
  if (!a.is(lf::ExprKind::pi)) return base(a, m, binders);
  Opened x = open_pi(a, binders);
  RigidityEnv env;
  env.pi_vars.insert(pi_vars.begin(), pi_vars.end());
  env.target = x.name;
  env.relaxed_init = opts_.relaxed_init;
  Formula hyp = rigid(env, x.body, RigidForm::type) ? hohh::top()
                                                   : negative(x.domain, x.var, binders);
  pi_vars.push_back(x.name);
  Formula rest = positive(x.body, apply_shifted(m, x.var), binders, pi_vars);
  pi_vars.pop_back();
  binders.pop_back();
  return hohh::forall(x.type, x.hint, hohh::implies(hyp, rest));
}

Formula Translator::finish(const Formula& f) const {
  return opts_.simplify_top ? hohh::simplify_top(f) : f;
}

namespace {

void require_type(const lf::Expr& a, const HTerm& m) {
  SimpleType want = phi(a);
  SimpleType got = hohh::type_of(m);
  if (!(got == want))
    throw SimpleTypeError("term of type " + hohh::to_string(got) +
                          " cannot inhabit a type encoded at " + hohh::to_string(want));
}

}  // namespace

Formula Translator::goal(const lf::Expr& a, const HTerm& m) const {
  require_type(a, m);
  std::vector<Binder> binders;
  if (opts_.mode == Mode::simple) return finish(simple(a, m, binders));
  return finish(negative(a, m, binders));
}

Formula Translator::clause(const lf::Expr& a, const HTerm& m) const {
  require_type(a, m);
  std::vector<Binder> binders;
  if (opts_.mode == Mode::simple) return finish(simple(a, m, binders));
  std::vector<std::string> pi_vars;
  return finish(positive(a, m, binders, pi_vars));
}

hohh::Program Translator::program() const {
  hohh::Program p;
  for (const auto& entry : ctx_.entries()) {
    if (opts_.mode == Mode::optimized && entry.kind == lf::EntryKind::kind_assign) {
      HTerm pred = predicate(entry);
      p.signature.push_back(hohh::ConstDecl{entry.name, pred.type()});
    } else {
      p.signature.push_back(hohh::ConstDecl{entry.name, phi(entry.classifier)});
    }
  }
  if (opts_.mode == Mode::simple)
    p.signature.push_back(hohh::ConstDecl{"hastype", hastype().type()});
  for (const auto& entry : ctx_.entries()) {
    if (entry.kind != lf::EntryKind::type_assign) continue;
    std::vector<SimpleType> env;
    HTerm c = hohh::eta_expand(constant_for(entry), phi(entry.classifier), env);
    p.clauses.push_back(hohh::clausify(clause(entry.classifier, c)));
  }
  return p;
}

Formula simple_translate_type(const lf::Context& ctx, const lf::Expr& a, const HTerm& m) {
  TranslateOptions opts;
  opts.mode = Mode::simple;
  return Translator(ctx, opts).goal(a, m);
}

Formula opt_translate_neg(const lf::Context& ctx, const lf::Expr& a, const HTerm& m,
                          TranslateOptions opts) {
  opts.mode = Mode::optimized;
  return Translator(ctx, opts).goal(a, m);
}

Formula opt_translate_pos(const lf::Context& ctx, const lf::Expr& a, const HTerm& m,
                          TranslateOptions opts) {
  opts.mode = Mode::optimized;
  return Translator(ctx, opts).clause(a, m);
}

hohh::Program translate_signature(const lf::Context& ctx, TranslateOptions opts) {
  return Translator(ctx, opts).program();
}

}  // namespace lf2hh::translate
