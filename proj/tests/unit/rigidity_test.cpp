#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lf2hh/translate/rigidity.hpp"
#include "lf2hh/translate/translate.hpp"

namespace lf2hh::unit {
namespace {

using lf::app;
using lf::Expr;
namespace tr = lf2hh::translate;

Expr cons_type() {
  // append (cons x l) k (cons x m)
  return app(v("append"), {app(v("cons"), {v("x"), v("l")}), v("k"),
                           app(v("cons"), {v("x"), v("m")})});
}

tr::RigidityEnv env_for(const std::string& target) {
  tr::RigidityEnv env;
  for (const char* n : {"x", "l", "k", "m", "a"})
    if (n != target) env.pi_vars.insert(n);
  env.target = target;
  return env;
}

TEST(Rigidity, VariableUnderConstructorIsRigid) {
  EXPECT_TRUE(tr::rigid(env_for("x"), cons_type(), tr::RigidForm::type));
  EXPECT_TRUE(tr::rigid(env_for("l"), cons_type(), tr::RigidForm::type));
  EXPECT_TRUE(tr::rigid(env_for("k"), cons_type(), tr::RigidForm::type));
}

TEST(Rigidity, AbsentVariableIsNotRigid) {
  EXPECT_FALSE(tr::rigid(env_for("a"), cons_type(), tr::RigidForm::type));
}

TEST(Rigidity, AppliedToConstantIsNotRigid) {
  tr::RigidityEnv env;
  env.target = "x";
  EXPECT_FALSE(tr::rigid(env, app(v("x"), v("z")), tr::RigidForm::object));
}

TEST(Rigidity, RelaxedLeafAcceptsConstantArgument) {
  tr::RigidityEnv env;
  env.target = "x";
  env.relaxed_init = true;
  EXPECT_TRUE(tr::rigid(env, app(v("x"), v("z")), tr::RigidForm::object));
}

TEST(Rigidity, AppliedToDistinctLocalsIsRigid) {
  tr::RigidityEnv env;
  env.target = "x";
  env.local_binders = {"y", "w"};
  EXPECT_TRUE(tr::rigid(env, app(v("x"), {v("y"), v("w")}), tr::RigidForm::object));
  EXPECT_FALSE(tr::rigid(env, app(v("x"), {v("y"), v("y")}), tr::RigidForm::object));
}

TEST(Rigidity, UnderLambdaBinder) {
  tr::RigidityEnv env;
  env.target = "f";
  // c ([y:nat] f y)
  Expr e = app(v("c"), lf::lam_over("y", v("nat"), app(v("f"), v("y"))));
  EXPECT_TRUE(tr::rigid(env, e, tr::RigidForm::object));
}

TEST(Rigidity, FlexibleHeadHidesOccurrences) {
  tr::RigidityEnv env;
  env.target = "x";
  env.pi_vars = {"g"};
  EXPECT_FALSE(tr::rigid(env, app(v("g"), v("x")), tr::RigidForm::object));
  EXPECT_TRUE(tr::rigid(env, app(v("s"), v("x")), tr::RigidForm::object));
}

TEST(Rigidity, TypeFormNeedsSomeRigidIndex) {
  tr::RigidityEnv env = env_for("m");
  EXPECT_TRUE(tr::rigid(env, cons_type(), tr::RigidForm::type));
  EXPECT_FALSE(tr::rigid(env, app(v("append"), {v("l"), v("k"), v("nil")}), tr::RigidForm::type));
}

TEST(Rigidity, CounterexampleSignatureKeepsCheck) {
  lf::Context ctx = frontend::prepare(frontend::load_signature(kCorpus + "/num.elf"));
  std::string shipped = frontend::translate_text(ctx, {});
  std::string relaxed = frontend::translate_text(ctx, {.relaxed_init = true});
  EXPECT_NE(shipped, relaxed);
  EXPECT_NE(relaxed.find("pi x\\ true => p (c (x1\\ x x1)) (x z)."), std::string::npos)
      << relaxed;
  EXPECT_NE(shipped.find("pi x\\ (pi n\\ nat n => num (x n) z) => p (c (x1\\ x x1)) (x z)."),
            std::string::npos)
      << shipped;
}

}  // namespace
}  // namespace lf2hh::unit
