#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lf2hh/error.hpp"
#include "lf2hh/lf/canonical.hpp"
#include "lf2hh/lf/expr.hpp"

namespace lf2hh::unit {
namespace {

using lf::app;
using lf::bvar;
using lf::Expr;
using lf::lam;

TEST(LfCanonical, EtaExpandsUnaryConstant) {
  lf::Context ctx = append_ctx();
  Expr got = lf::canonicalize(v("s"), lf::arrow(v("nat"), v("nat")), ctx);
  EXPECT_TRUE(lf::alpha_equal(got, lam("x", v("nat"), app(v("s"), bvar(0)))));
}

TEST(LfCanonical, BaseConstantUnchanged) {
  lf::Context ctx = append_ctx();
  EXPECT_TRUE(lf::alpha_equal(lf::canonicalize(v("z"), v("nat"), ctx), v("z")));
}

TEST(LfCanonical, EtaExpandsDependentConstant) {
  lf::Context ctx = append_ctx();
  Expr a = parse(ctx, "{K:list} append nil K K");
  Expr got = lf::canonicalize(v("appNil"), a, ctx);
  EXPECT_TRUE(lf::alpha_equal(got, lam("K", v("list"), app(v("appNil"), bvar(0)))));
  EXPECT_TRUE(lf::is_canonical(got, ctx));
}

TEST(LfCanonical, ExpandsArgumentsOfHigherType) {
  lf::Context ctx;
  ctx.add("nat", lf::type());
  ctx.add("s", lf::arrow(v("nat"), v("nat")));
  ctx.add("f", lf::arrow(lf::arrow(v("nat"), v("nat")), v("nat")));
  Expr got = lf::canonicalize(app(v("f"), v("s")), v("nat"), ctx);
  EXPECT_TRUE(lf::alpha_equal(got, app(v("f"), lam("x", v("nat"), app(v("s"), bvar(0))))));
}

TEST(LfCanonical, CanonicalObjects) {
  lf::Context ctx = append_ctx();
  EXPECT_TRUE(lf::is_canonical(parse(ctx, "cons z nil"), ctx));
  EXPECT_FALSE(lf::is_canonical(v("s"), ctx));
  Expr redex = app(lam("x", v("nat"), bvar(0)), v("z"));
  EXPECT_FALSE(lf::is_canonical(redex, ctx));
}

TEST(LfCanonical, CanonicalizeIsIdempotent) {
  lf::Context ctx = append_ctx();
  Expr a = parse(ctx, "{K:list} append nil K K");
  Expr once = lf::canonicalize(v("appNil"), a, ctx);
  EXPECT_TRUE(lf::alpha_equal(lf::canonicalize(once, a, ctx), once));
}

TEST(LfCanonical, ClassifierMismatchThrows) {
  lf::Context ctx = append_ctx();
  EXPECT_THROW(lf::canonicalize(v("s"), v("nat"), ctx), ClassifierError);
}

TEST(LfCanonical, UnknownNameThrows) {
  lf::Context ctx = append_ctx();
  EXPECT_THROW(lf::is_canonical(v("nosuch"), ctx), UnboundVariable);
}

TEST(LfCanonical, ContextCanonicalization) {
  lf::Context raw;
  raw.add("nat", lf::type());
  raw.add("s", lf::arrow(v("nat"), v("nat")));
  raw.add("p", lf::arrow(lf::arrow(v("nat"), v("nat")), lf::type()));
  raw.add("c", app(v("p"), v("s")));
  lf::Context ctx = lf::canonicalize_context(raw);
  EXPECT_TRUE(lf::is_canonical(ctx));
  EXPECT_FALSE(lf::is_canonical(raw));
  EXPECT_TRUE(lf::alpha_equal(ctx.find("c")->classifier,
                              app(v("p"), lam("x", v("nat"), app(v("s"), bvar(0))))));
}

}  // namespace
}  // namespace lf2hh::unit
