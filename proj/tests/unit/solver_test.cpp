#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lf2hh/engine/solver.hpp"
#include "lf2hh/engine/unify.hpp"
#include "lf2hh/hohh/formula.hpp"
#include "lf2hh/hohh/print.hpp"
#include "lf2hh/translate/translate.hpp"

namespace lf2hh::unit {
namespace {

using namespace lf2hh::hohh;
using engine::SolveEvent;
namespace tr = lf2hh::translate;

HTerm meta_m() { return hmeta(0, "M", lf_obj(), 0); }

struct Problem {
  lf::Context ctx;
  Program program;
  Formula goal;
};

Problem append_setup(tr::Mode mode, const std::string& query) {
  Problem s{append_ctx(), {}, {}};
  tr::Translator t(s.ctx, {.mode = mode});
  s.program = t.program();
  s.goal = t.goal(frontend::prepare_query(s.ctx, parse(s.ctx, query)), meta_m());
  return s;
}

Problem sig_setup(const std::string& sig, const std::string& query) {
  Problem s{frontend::prepare(frontend::parse_signature(sig)), {}, {}};
  tr::Translator t(s.ctx, {});
  s.program = t.program();
  s.goal = t.goal(frontend::prepare_query(s.ctx, parse(s.ctx, query)), meta_m());
  return s;
}

TEST(Solver, AppendQueryOptimized) {
  Problem s = append_setup(tr::Mode::optimized, kAppendQuery);
  engine::Solver solver(s.program, s.goal, {.witness = "M"});
  SolveEvent e = solver.next();
  ASSERT_EQ(e.kind, SolveEvent::Kind::answer);
  EXPECT_EQ(to_string(e.answer->witness), kAppendWitness);
  EXPECT_TRUE(engine::replay(s.program, s.goal, *e.answer));
  EXPECT_EQ(solver.next().kind, SolveEvent::Kind::exhausted);
}

TEST(Solver, AppendQuerySimple) {
  Problem s = append_setup(tr::Mode::simple, kAppendQuery);
  engine::Solver solver(s.program, s.goal, {.witness = "M"});
  SolveEvent e = solver.next();
  ASSERT_EQ(e.kind, SolveEvent::Kind::answer);
  EXPECT_EQ(to_string(e.answer->witness), kAppendWitness);
}

TEST(Solver, SimpleModeListTyping) {
  Problem s = append_setup(tr::Mode::simple, "list");
  Formula g = atom(happ_raw(tr::Translator::hastype(),
                        {tr::encode(parse(s.ctx, "cons (s z) nil"), s.ctx), tr::encode(v("list"), s.ctx)}));
  auto events = engine::solve_all(s.program, g, {}, 1);
  ASSERT_FALSE(events.empty());
  EXPECT_EQ(events[0].kind, SolveEvent::Kind::answer);
  EXPECT_TRUE(events[0].answer->bindings.empty());
}

TEST(Solver, TopGoal) {
  Problem s = append_setup(tr::Mode::optimized, "nat");
  auto events = engine::solve_all(s.program, top(), {}, 5);
  ASSERT_EQ(events.size(), 2u);
  EXPECT_EQ(events[0].kind, SolveEvent::Kind::answer);
  EXPECT_TRUE(events[0].answer->bindings.empty());
  EXPECT_TRUE(engine::replay(s.program, top(), *events[0].answer));
  EXPECT_EQ(events[1].kind, SolveEvent::Kind::exhausted);
}

TEST(Solver, FiniteFailure) {
  Problem s = append_setup(tr::Mode::optimized, "append nil nil (cons z nil)");
  auto events = engine::solve_all(s.program, s.goal, {}, 5);
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0].kind, SolveEvent::Kind::exhausted);
}

TEST(Solver, AnswersInClauseOrder) {
  Problem s = append_setup(tr::Mode::optimized, "nat");
  auto events = engine::solve_all(s.program, s.goal, {.witness = "M"}, 3);
  ASSERT_EQ(events.size(), 3u);
  EXPECT_EQ(to_string(events[0].answer->witness), "z");
  EXPECT_EQ(to_string(events[1].answer->witness), "s z");
  EXPECT_EQ(to_string(events[2].answer->witness), "s (s z)");
}

TEST(Solver, BudgetExhaustionIsDistinct) {
  Problem s = sig_setup("p : type. c : p -> p.", "p");
  auto events = engine::solve_all(s.program, s.goal, {.max_steps = 100}, 1);
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0].kind, SolveEvent::Kind::budget_exhausted);
  EXPECT_GE(events[0].stats.backchain_steps, 100u);
}

TEST(Solver, DepthBoundCutsOff) {
  Problem s = sig_setup("p : type. c : p -> p.", "p");
  auto events = engine::solve_all(s.program, s.goal, {.max_depth = 4}, 1);
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0].kind, SolveEvent::Kind::exhausted);
  EXPECT_GT(events[0].stats.depth_cutoffs, 0u);
}

TEST(Solver, EigenConstantsRespectLevels) {
  Problem s = sig_setup("nat : type. z : nat.", "nat");
  HTerm nat = hconst("nat", arrow(lf_obj(), prop()));
  // pi x\ nat x => nat M : M may not mention x.
  Formula g = forall(lf_obj(), "x", implies(atom(happ_raw(nat, {hbvar(0)})),
                                            atom(happ_raw(nat, {meta_m()}))));
  auto events = engine::solve_all(s.program, g, {.witness = "M"}, 5);
  ASSERT_EQ(events.size(), 2u);
  ASSERT_EQ(events[0].kind, SolveEvent::Kind::answer);
  EXPECT_EQ(to_string(events[0].answer->witness), "z");
  for (const auto& [id, t] : events[0].answer->by_id) EXPECT_EQ(engine::max_const_level(t), 0u);
  EXPECT_TRUE(engine::replay(s.program, g, *events[0].answer));
  EXPECT_EQ(events[1].kind, SolveEvent::Kind::exhausted);
}

TEST(Solver, HypothesisIsScoped) {
  Problem s = sig_setup("nat : type. z : nat.", "nat");
  HTerm nat = hconst("nat", arrow(lf_obj(), prop()));
  HTerm w = hconst("w", lf_obj());
  // (nat w => nat w) succeeds; nat w alone fails.
  Formula hyp = implies(atom(happ_raw(nat, {w})), atom(happ_raw(nat, {w})));
  EXPECT_EQ(engine::solve_all(s.program, hyp, {}, 1)[0].kind, SolveEvent::Kind::answer);
  EXPECT_EQ(engine::solve_all(s.program, atom(happ_raw(nat, {w})), {}, 1)[0].kind,
            SolveEvent::Kind::exhausted);
}

TEST(Solver, HigherOrderQuery) {
  Problem s = append_setup(tr::Mode::optimized, "nat");
  s.goal = tr::Translator(s.ctx, {}).goal(
      frontend::prepare_query(s.ctx, parse(s.ctx, "{K:list} append nil K K")),
      hmeta(0, "M", arrow(lf_obj(), lf_obj()), 0));
  auto events = engine::solve_all(s.program, s.goal, {.witness = "M"}, 1);
  ASSERT_EQ(events[0].kind, SolveEvent::Kind::answer);
  HTerm app_nil = hconst("appNil", arrow(lf_obj(), lf_obj()));
  EXPECT_TRUE(alpha_equal(events[0].answer->witness,
                          habs(lf_obj(), "k", happ_raw(app_nil, {hbvar(0)}))));
  EXPECT_TRUE(engine::replay(s.program, s.goal, *events[0].answer));
}

TEST(Replay, CorruptedBindingFails) {
  Problem s = append_setup(tr::Mode::optimized, kAppendQuery);
  auto events = engine::solve_all(s.program, s.goal, {.witness = "M"}, 1);
  ASSERT_EQ(events[0].kind, SolveEvent::Kind::answer);
  engine::Answer bad = *events[0].answer;
  bad.by_id[0] = tr::encode(
      parse(s.ctx, "appCons (s z) nil (cons (s z) nil) (cons (s z) nil) (appNil (cons (s z) nil))"),
      s.ctx);
  EXPECT_FALSE(engine::replay(s.program, s.goal, bad));
}

TEST(Replay, TruncatedTraceFails) {
  Problem s = append_setup(tr::Mode::optimized, kAppendQuery);
  auto events = engine::solve_all(s.program, s.goal, {.witness = "M"}, 1);
  engine::Answer bad = *events[0].answer;
  ASSERT_FALSE(bad.trace.empty());
  bad.trace.pop_back();
  EXPECT_FALSE(engine::replay(s.program, s.goal, bad));
}

TEST(Solver, StepCountsAreDeterministic) {
  Problem s = append_setup(tr::Mode::simple, kAppendQuery);
  auto a = engine::solve_all(s.program, s.goal, {}, 1);
  auto b = engine::solve_all(s.program, s.goal, {}, 1);
  EXPECT_EQ(a[0].stats.backchain_steps, b[0].stats.backchain_steps);
  EXPECT_EQ(a[0].stats.unify_calls, b[0].stats.unify_calls);
}

TEST(Solver, OptimizedTakesFewerSteps) {
  Problem simple = append_setup(tr::Mode::simple, kAppendQuery);
  Problem opt = append_setup(tr::Mode::optimized, kAppendQuery);
  auto a = engine::solve_all(simple.program, simple.goal, {}, 1);
  auto b = engine::solve_all(opt.program, opt.goal, {}, 1);
  EXPECT_LT(b[0].stats.backchain_steps, a[0].stats.backchain_steps);
}

TEST(Solver, IterativeDeepeningFindsAnswer) {
  Problem s = append_setup(tr::Mode::optimized, kAppendQuery);
  SolveEvent e = engine::solve_iterative(s.program, s.goal, {.witness = "M"}, 10);
  ASSERT_EQ(e.kind, SolveEvent::Kind::answer);
  EXPECT_EQ(to_string(e.answer->witness), kAppendWitness);
}

}  // namespace
}  // namespace lf2hh::unit
