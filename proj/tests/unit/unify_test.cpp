#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lf2hh/engine/unify.hpp"
#include "lf2hh/hohh/print.hpp"
#include "lf2hh/hohh/term.hpp"

namespace lf2hh::unit {
namespace {

using namespace lf2hh::hohh;
using engine::Store;
using engine::Unifier;
using engine::UnifyResult;

const SimpleType O = lf_obj();
const SimpleType OO = arrow(lf_obj(), lf_obj());
const SimpleType OOO = arrows({lf_obj(), lf_obj()}, lf_obj());

HTerm k(const std::string& n, SimpleType t = lf_obj(), std::uint32_t level = 0) {
  return hconst(n, std::move(t), level);
}

TEST(Unify, FirstOrderMatch) {
  Store st;
  Unifier u(st);
  HTerm x = st.fresh("X", O, 0);
  HTerm l = st.fresh("L", O, 0);
  HTerm cons = k("cons", OOO);
  HTerm goal = happ_raw(cons, {k("z"), k("nil")});
  ASSERT_EQ(u.unify(happ_raw(cons, {x, l}), goal), UnifyResult::ok);
  EXPECT_TRUE(alpha_equal(st.resolve(x), k("z")));
  EXPECT_TRUE(alpha_equal(st.resolve(l), k("nil")));
  EXPECT_TRUE(u.delayed().empty());
}

TEST(Unify, AppendHeadAgainstQuery) {
  Store st;
  Unifier u(st);
  HTerm cons = k("cons", OOO);
  HTerm s = k("s", OO);
  HTerm app4 = k("append", arrows({O, O, O, O}, prop()));
  HTerm appCons = k("appCons", arrows({O, O, O, O, O}, O));
  HTerm x = st.fresh("X", O, 0), l = st.fresh("L", O, 0), kk = st.fresh("K", O, 0),
        m = st.fresh("M", O, 0), a = st.fresh("A", O, 0), w = st.fresh("W", O, 0);
  HTerm head = happ_raw(app4, {happ_raw(appCons, {x, l, kk, m, a}), happ_raw(cons, {x, l}), kk,
                               happ_raw(cons, {x, m})});
  HTerm sz_nil = happ_raw(cons, {happ_raw(s, {k("z")}), k("nil")});
  HTerm goal = happ_raw(app4, {w, happ_raw(cons, {k("z"), k("nil")}), sz_nil,
                               happ_raw(cons, {k("z"), sz_nil})});
  ASSERT_EQ(u.unify(head, goal), UnifyResult::ok);
  EXPECT_TRUE(alpha_equal(st.resolve(x), k("z")));
  EXPECT_TRUE(alpha_equal(st.resolve(l), k("nil")));
  EXPECT_TRUE(alpha_equal(st.resolve(kk), sz_nil));
  EXPECT_TRUE(alpha_equal(st.resolve(m), sz_nil));
  EXPECT_EQ(to_string(st.resolve(w)), "appCons z nil (cons (s z) nil) (cons (s z) nil) A");
}

TEST(Unify, PatternSolution) {
  Store st;
  Unifier u(st);
  HTerm f = st.fresh("F", OOO, 0);
  HTerm x = k("x", O, 1);
  HTerm y = k("y", O, 1);
  HTerm c = k("c", OOO);
  ASSERT_EQ(u.unify(happ_raw(f, {x, y}), happ_raw(c, {x, y})), UnifyResult::ok);
  EXPECT_TRUE(u.delayed().empty());
  HTerm want = habs(O, "a", habs(O, "b", happ_raw(c, {hbvar(1), hbvar(0)})));
  EXPECT_TRUE(alpha_equal(normalize(st.resolve(f)), want));
}

TEST(Unify, PatternSolutionPermutesArguments) {
  Store st;
  Unifier u(st);
  HTerm f = st.fresh("F", OOO, 0);
  HTerm x = k("x", O, 1);
  HTerm y = k("y", O, 1);
  HTerm c = k("c", OOO);
  ASSERT_EQ(u.unify(happ_raw(f, {x, y}), happ_raw(c, {y, x})), UnifyResult::ok);
  HTerm want = habs(O, "a", habs(O, "b", happ_raw(c, {hbvar(0), hbvar(1)})));
  EXPECT_TRUE(alpha_equal(normalize(st.resolve(f)), want));
}

TEST(Unify, RigidClash) {
  Store st;
  Unifier u(st);
  HTerm x = st.fresh("X", O, 0);
  EXPECT_EQ(u.unify(happ_raw(k("s", OO), {x}), k("z")), UnifyResult::fail);
}

TEST(Unify, OccursCheck) {
  Store st;
  Unifier u(st);
  HTerm x = st.fresh("X", O, 0);
  EXPECT_EQ(u.unify(x, happ_raw(k("s", OO), {x})), UnifyResult::fail);
}

TEST(Unify, LevelCheck) {
  Store st;
  Unifier u(st);
  HTerm x = st.fresh("X", O, 0);
  EXPECT_EQ(u.unify(x, k("e", O, 1)), UnifyResult::fail);
  HTerm y = st.fresh("Y", O, 1);
  EXPECT_EQ(u.unify(y, k("e", O, 1)), UnifyResult::ok);
}

TEST(Unify, PatternCannotCaptureForeignLocal) {
  Store st;
  Unifier u(st);
  HTerm f = st.fresh("F", OO, 0);
  HTerm x = k("x", O, 1);
  HTerm y = k("y", O, 1);
  EXPECT_EQ(u.unify(happ_raw(f, {x}), happ_raw(k("c", OO), {y})), UnifyResult::fail);
}

TEST(Unify, NonPatternIsDelayed) {
  Store st;
  Unifier u(st);
  HTerm f = st.fresh("F", OO, 0);
  EXPECT_EQ(u.unify(happ_raw(f, {k("z")}), k("z")), UnifyResult::ok);
  EXPECT_EQ(u.delayed().size(), 1u);
  EXPECT_FALSE(st.bound(f.id()));
}

TEST(Unify, DelayedPairWakesUp) {
  Store st;
  Unifier u(st);
  HTerm f = st.fresh("F", OO, 0);
  ASSERT_EQ(u.unify(happ_raw(f, {k("z")}), k("z")), UnifyResult::ok);
  ASSERT_EQ(u.delayed().size(), 1u);
  HTerm s = k("s", OO);
  EXPECT_EQ(u.unify(f, habs(O, "n", happ_raw(s, {hbvar(0)}))), UnifyResult::fail);
}

TEST(Unify, UnderBinders) {
  Store st;
  Unifier u(st);
  HTerm x = st.fresh("X", O, 0);
  HTerm c = k("c", OOO);
  HTerm lhs = habs(O, "a", happ_raw(c, {hbvar(0), x}));
  HTerm rhs = habs(O, "b", happ_raw(c, {hbvar(0), k("z")}));
  ASSERT_EQ(u.unify(lhs, rhs), UnifyResult::ok);
  EXPECT_TRUE(alpha_equal(st.resolve(x), k("z")));
}

TEST(Unify, BoundVariableEscapeFails) {
  Store st;
  Unifier u(st);
  HTerm x = st.fresh("X", O, 0);
  HTerm c = k("c", OOO);
  HTerm lhs = habs(O, "a", happ_raw(c, {hbvar(0), x}));
  HTerm rhs = habs(O, "b", happ_raw(c, {hbvar(0), hbvar(0)}));
  EXPECT_EQ(u.unify(lhs, rhs), UnifyResult::fail);
}

TEST(Store, UndoRestoresBindings) {
  Store st;
  Unifier u(st);
  HTerm x = st.fresh("X", O, 0);
  Store::Mark m = st.mark();
  ASSERT_EQ(u.unify(x, k("z")), UnifyResult::ok);
  EXPECT_TRUE(st.bound(x.id()));
  st.undo(m);
  EXPECT_FALSE(st.bound(x.id()));
  EXPECT_EQ(st.trail_size(), m.trail);
}

TEST(Store, EtaContract) {
  HTerm s = k("s", OO);
  EXPECT_TRUE(alpha_equal(engine::eta_contract(habs(O, "x", happ_raw(s, {hbvar(0)}))), s));
}

}  // namespace
}  // namespace lf2hh::unit
