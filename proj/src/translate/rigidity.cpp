#include "lf2hh/translate/rigidity.hpp"

#include "lf2hh/lf/context.hpp"

namespace lf2hh::translate {

namespace {

class Judge {
 public:
  explicit Judge(const RigidityEnv& env) : env_(env) {}

  bool type(const lf::Expr& a) {
    if (a.is(lf::ExprKind::pi)) {
      // PI_t: the new binder joins the flexible variables.
      std::string y = lf::fresh_name(a.name());
      env_.pi_vars.insert(y);
      bool r = type(lf::open(a.body(), y));
      env_.pi_vars.erase(y);
      return r;
    }
    // APP_t: some argument of the base type is rigid.
    lf::Spine s = lf::spine(a);
    for (const auto& arg : s.args)
      if (object(arg)) return true;
    return false;
  }

  bool object(const lf::Expr& m) {
    if (m.is(lf::ExprKind::lam)) {
      // ABS_o
      std::string y = lf::fresh_name(m.name());
      env_.local_binders.insert(y);
      bool r = object(lf::open(m.body(), y));
      env_.local_binders.erase(y);
      return r;
    }
    lf::Spine s = lf::spine(m);
    if (!s.head.is(lf::ExprKind::var)) return false;
    const std::string& y = s.head.name();
    if (y == env_.target) return init(s);
    // APP_o: a head that is not instantiated at run time keeps its
    // arguments in place.
    if (env_.pi_vars.count(y)) return false;
    for (const auto& arg : s.args)
      if (object(arg)) return true;
    return false;
  }

 private:
  // INIT_o: the target applied to distinct local binders.
  bool init(const lf::Spine& s) {
    if (env_.relaxed_init) return true;
    std::set<std::string> seen;
    for (const auto& arg : s.args) {
      if (!arg.is(lf::ExprKind::var)) return false;
      if (!env_.local_binders.count(arg.name())) return false;
      if (!seen.insert(arg.name()).second) return false;
    }
    return true;
  }

  RigidityEnv env_;
};

}  // namespace

bool rigid(const RigidityEnv& env, const lf::Expr& e, RigidForm form) {
  Judge j(env);
  return form == RigidForm::type ? j.type(e) : j.object(e);
}

}  // namespace lf2hh::translate
