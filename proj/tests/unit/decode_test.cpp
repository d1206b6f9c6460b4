#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lf2hh/error.hpp"
#include "lf2hh/extract/decode.hpp"
#include "lf2hh/hohh/term.hpp"
#include "lf2hh/translate/encode.hpp"

namespace lf2hh::unit {
namespace {

namespace tr = lf2hh::translate;
using extract::decode;
using extract::verify_witness;

TEST(Decode, AppendWitness) {
  lf::Context ctx = append_ctx();
  lf::Expr m = parse(ctx, kAppendWitness);
  lf::Expr got = decode(tr::encode(m, ctx), parse(ctx, kAppendQuery), ctx);
  EXPECT_TRUE(lf::alpha_equal(got, m));
  EXPECT_TRUE(verify_witness(ctx, got, parse(ctx, kAppendQuery)).ok);
}

TEST(Decode, RecoversLambdaAnnotation) {
  lf::Context ctx = append_ctx();
  hohh::HTerm t = tr::encode(parse(ctx, "[K:list] appNil K"), ctx);
  lf::Expr got = decode(t, parse(ctx, "{K:list} append nil K K"), ctx);
  ASSERT_TRUE(got.is(lf::ExprKind::lam));
  EXPECT_TRUE(lf::alpha_equal(got.domain(), v("list")));
  EXPECT_TRUE(lf::alpha_equal(got, parse(ctx, "[K:list] appNil K")));
}

TEST(Decode, EtaExpandsBareHead) {
  lf::Context ctx = append_ctx();
  hohh::HTerm t = tr::constant_for(*ctx.find("appNil"));
  lf::Expr got = decode(t, parse(ctx, "{K:list} append nil K K"), ctx);
  EXPECT_TRUE(lf::alpha_equal(got, parse(ctx, "[K:list] appNil K")));
}

TEST(Decode, IsSyntacticVerifyIsTheOracle) {
  lf::Context ctx = append_ctx();
  lf::Expr sz = parse(ctx, "s z");
  lf::Expr got = decode(tr::encode(sz, ctx), v("list"), ctx);
  EXPECT_TRUE(lf::alpha_equal(got, sz));
  EXPECT_FALSE(verify_witness(ctx, got, v("list")).ok);
}

TEST(Decode, Errors) {
  lf::Context ctx = append_ctx();
  EXPECT_THROW(decode(hohh::hconst("nosuch", hohh::lf_obj()), v("nat"), ctx), DecodeError);
  hohh::HTerm cons1 = hohh::happ_raw(
      tr::constant_for(*ctx.find("cons")), {tr::constant_for(*ctx.find("z"))});
  EXPECT_THROW(decode(cons1, v("list"), ctx), Error);
  hohh::HTerm lam = hohh::habs(hohh::lf_obj(), "x", hohh::hbvar(0));
  EXPECT_THROW(decode(lam, v("nat"), ctx), Error);
}

TEST(Verify, Examples) {
  lf::Context ctx = append_ctx();
  EXPECT_TRUE(verify_witness(ctx, v("z"), v("nat")).ok);
  EXPECT_FALSE(verify_witness(ctx, parse(ctx, "s z"), v("list")).ok);
}

}  // namespace
}  // namespace lf2hh::unit
