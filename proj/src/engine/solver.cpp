#include "lf2hh/engine/solver.hpp"

#include <functional>

#include "lf2hh/hohh/print.hpp"

namespace lf2hh::engine {

using hohh::Clause;
using hohh::Formula;
using hohh::FormulaKind;
using hohh::HTerm;
using hohh::TermKind;

const char* to_string(SolveEvent::Kind k) {
  switch (k) {
    case SolveEvent::Kind::answer:
      return "answer";
    case SolveEvent::Kind::residual:
      return "residual";
    case SolveEvent::Kind::exhausted:
      return "exhausted";
    case SolveEvent::Kind::budget_exhausted:
      return "budget_exhausted";
  }
  return "?";
}

namespace {

struct Hyp {
  std::shared_ptr<const Clause> clause;
  std::shared_ptr<const Hyp> next;
};
using HypList = std::shared_ptr<const Hyp>;

struct GoalNode {
  Formula formula;
  HypList hyps;
  std::uint32_t level = 0;
  std::uint32_t depth = 0;
};

struct GoalCell {
  GoalNode goal;
  std::shared_ptr<const GoalCell> next;
};
using Goals = std::shared_ptr<const GoalCell>;

Goals push(GoalNode g, Goals rest) {
  return std::make_shared<const GoalCell>(GoalCell{std::move(g), std::move(rest)});
}

HTerm map_metas(const HTerm& t, const std::function<HTerm(const HTerm&)>& f) {
  switch (t.kind()) {
    case TermKind::meta:
      return f(t);
    case TermKind::abs:
      return hohh::habs(t.type(), t.hint(), map_metas(t.body(), f));
    case TermKind::app: {
      std::vector<HTerm> args;
      for (const auto& a : t.args()) args.push_back(map_metas(a, f));
      return hohh::happ(map_metas(t.head(), f), args);
    }
    default:
      return t;
  }
}

Formula map_metas(const Formula& g, const std::function<HTerm(const HTerm&)>& f) {
  switch (g.kind()) {
    case FormulaKind::top:
      return g;
    case FormulaKind::atom:
      return hohh::atom(map_metas(g.atom(), f));
    case FormulaKind::implies:
      return hohh::implies(map_metas(g.lhs(), f), map_metas(g.rhs(), f));
    case FormulaKind::forall:
      return hohh::forall(g.type(), g.hint(), map_metas(g.body(), f));
  }
  return g;
}

std::vector<const Clause*> candidates(
    const HypList& hyps, const std::string& pred,
    const std::unordered_map<std::string, std::vector<const Clause*>>& index) {
  std::vector<const Clause*> out;
  for (const Hyp* h = hyps.get(); h; h = h->next.get())
    if (h->clause->predicate() == pred) out.push_back(h->clause.get());
  auto it = index.find(pred);
  if (it != index.end()) out.insert(out.end(), it->second.begin(), it->second.end());
  return out;
}

std::vector<HTerm> scope_values(const std::vector<HTerm>& metas, std::size_t scope) {
  std::vector<HTerm> values;
  values.reserve(scope);
  for (std::size_t j = 0; j < scope; ++j) values.push_back(metas[scope - 1 - j]);
  return values;
}

// Premises of an instantiated clause, first premise first, in front of `rest`.
Goals push_premises(const Clause& c, const std::vector<HTerm>& metas, const GoalNode& g,
                    Goals rest) {
  for (std::size_t i = c.premises.size(); i-- > 0;) {
    const auto& p = c.premises[i];
    Formula f = hohh::instantiate_bvars(p.goal, scope_values(metas, p.scope));
    rest = push(GoalNode{f, g.hyps, g.level, g.depth + 1}, std::move(rest));
  }
  return rest;
}

std::string eigen_name(const std::string& hint, std::uint64_t k) {
  return (hint.empty() ? std::string("c") : hint) + "#" + std::to_string(k);
}

std::unordered_map<std::string, std::vector<const Clause*>> index_program(
    const hohh::Program& program) {
  std::unordered_map<std::string, std::vector<const Clause*>> index;
  for (const auto& c : program.clauses) index[c.predicate()].push_back(&c);
  return index;
}

}  // namespace

struct Solver::Impl {
  struct PendingStep {
    TraceStep::Kind kind;
    std::size_t candidate = 0;
    std::vector<HTerm> metas;
    std::string eigen;
  };

  struct Choice {
    Goals rest;
    GoalNode goal;
    HTerm atom;
    std::vector<const Clause*> cands;
    std::size_t next = 0;
    Store::Mark mark;
    std::vector<DelayedPair> delayed;
    std::size_t trace_len = 0;
    std::uint64_t eigen_counter = 0;
  };

  const hohh::Program& program;
  std::unordered_map<std::string, std::vector<const Clause*>> index;
  SolveOptions opts;
  Store store;
  Unifier unifier{store};
  Goals goals;
  std::vector<Choice> choices;
  std::vector<PendingStep> trace;
  std::uint64_t eigen_counter = 0;
  Stats stats;
  std::optional<SolveEvent> terminal;
  bool resume = false;
  bool budget_hit = false;

  // Goal metavariables: original id, name, store term.
  struct GoalMeta {
    std::size_t original;
    std::string name;
    HTerm term;
  };
  std::vector<GoalMeta> goal_metas;
  std::optional<std::size_t> witness;

  Impl(const hohh::Program& p, const Formula& goal, SolveOptions o)
      : program(p), index(index_program(p)), opts(std::move(o)) {
    Formula g = map_metas(goal, [&](const HTerm& m) {
      for (const auto& gm : goal_metas)
        if (gm.original == m.id()) return gm.term;
      HTerm t = store.fresh(m.name(), m.type(), m.level());
      goal_metas.push_back(GoalMeta{m.id(), m.name(), t});
      return t;
    });
    for (std::size_t i = 0; i < goal_metas.size(); ++i) {
      if (opts.witness.empty() ? i == 0 : goal_metas[i].name == opts.witness) {
        witness = i;
        break;
      }
    }
    goals = push(GoalNode{g, nullptr, 0, 0}, nullptr);
  }

  SolveEvent finish(SolveEvent::Kind k) {
    stats.unify_calls = unifier.calls();
    SolveEvent e{k, std::nullopt, {}, stats};
    terminal = e;
    return e;
  }

  void restore(const Choice& c) {
    store.undo(c.mark);
    unifier.delayed() = c.delayed;
    trace.resize(c.trace_len);
    eigen_counter = c.eigen_counter;
  }

  // Tries the remaining candidates of the top choice point.
  bool advance() {
    Choice& c = choices.back();
    while (c.next < c.cands.size()) {
      const std::size_t idx = c.next++;
      restore(c);
      ++stats.decide_attempts;
      const Clause& clause = *c.cands[idx];
      std::vector<HTerm> metas;
      metas.reserve(clause.quants.size());
      for (const auto& q : clause.quants)
        metas.push_back(store.fresh(q.hint, q.type, c.goal.level));
      HTerm head = hohh::instantiate_bvars(clause.head, scope_values(metas, metas.size()));
      if (unifier.unify(head, c.atom) != UnifyResult::ok) continue;
      if (stats.backchain_steps >= opts.max_steps) {
        budget_hit = true;
        return false;
      }
      ++stats.backchain_steps;
      trace.push_back(PendingStep{TraceStep::Kind::backchain, idx, metas, {}});
      goals = push_premises(clause, metas, c.goal, c.rest);
      return true;
    }
    return false;
  }

  bool backtrack() {
    while (!choices.empty()) {
      if (advance()) return true;
      if (budget_hit) return false;
      restore(choices.back());
      choices.pop_back();
    }
    return false;
  }

  SolveEvent answer_event() {
    Answer a;
    Store::ResolveMemo memo;
    for (const auto& gm : goal_metas) {
      HTerm v = hohh::normalize(store.resolve(gm.term, memo));
      a.bindings[gm.name] = v;
      a.by_id[gm.original] = v;
    }
    if (witness) a.witness = a.bindings[goal_metas[*witness].name];
    for (const auto& s : trace) {
      TraceStep t{s.kind, s.candidate, {}, s.eigen};
      for (const auto& m : s.metas) t.values.push_back(store.resolve(m, memo));
      a.trace.push_back(std::move(t));
    }
    stats.unify_calls = unifier.calls();
    a.stats = stats;
    SolveEvent e{SolveEvent::Kind::answer, std::nullopt, {}, stats};
    if (!unifier.delayed().empty()) {
      ++stats.residual_branches;
      a.stats = stats;
      e.stats = stats;
      e.kind = SolveEvent::Kind::residual;
      for (const auto& p : unifier.delayed())
        e.detail += hohh::to_string(store.resolve(p.lhs)) + " = " +
                    hohh::to_string(store.resolve(p.rhs)) + "; ";
    }
    e.answer = std::move(a);
    return e;
  }

  SolveEvent next() {
    if (terminal) return *terminal;
    if (resume) {
      resume = false;
      if (!backtrack())
        return finish(budget_hit ? SolveEvent::Kind::budget_exhausted
                                 : SolveEvent::Kind::exhausted);
    }
    for (;;) {
      if (!goals) {
        resume = true;
        return answer_event();
      }
      GoalNode g = goals->goal;
      Goals rest = goals->next;
      switch (g.formula.kind()) {
        case FormulaKind::top:
          goals = rest;
          continue;
        case FormulaKind::implies: {
          auto clause = std::make_shared<const Clause>(hohh::clausify(g.formula.lhs()));
          HypList hyps = std::make_shared<const Hyp>(Hyp{clause, g.hyps});
          goals = push(GoalNode{g.formula.rhs(), hyps, g.level, g.depth}, rest);
          continue;
        }
        case FormulaKind::forall: {
          std::string name = eigen_name(g.formula.hint(), ++eigen_counter);
          HTerm c = hohh::hconst(name, g.formula.type(), g.level + 1);
          trace.push_back(PendingStep{TraceStep::Kind::eigen, 0, {}, name});
          goals = push(GoalNode{hohh::instantiate(g.formula.body(), c), g.hyps, g.level + 1,
                                g.depth},
                       rest);
          continue;
        }
        case FormulaKind::atom:
          break;
      }
      HTerm atom = store.whnf(g.formula.atom());
      const HTerm& head = hohh::head_of(atom);
      bool can_expand = head.is(TermKind::constant);
      if (opts.max_depth && g.depth >= *opts.max_depth) {
        ++stats.depth_cutoffs;
        can_expand = false;
      } else if (!can_expand) {
        // An atom with a flexible predicate cannot be selected on.
        ++stats.residual_branches;
      }
      if (can_expand) {
        Choice c;
        c.rest = rest;
        c.goal = g;
        c.atom = atom;
        c.cands = candidates(g.hyps, head.name(), index);
        c.mark = store.mark();
        c.delayed = unifier.delayed();
        c.trace_len = trace.size();
        c.eigen_counter = eigen_counter;
        choices.push_back(std::move(c));
        if (advance()) continue;
        if (budget_hit) return finish(SolveEvent::Kind::budget_exhausted);
        restore(choices.back());
        choices.pop_back();
      }
      if (!backtrack())
        return finish(budget_hit ? SolveEvent::Kind::budget_exhausted
                                 : SolveEvent::Kind::exhausted);
    }
  }
};

Solver::Solver(const hohh::Program& program, const Formula& goal, SolveOptions opts)
    : impl_(std::make_unique<Impl>(program, goal, std::move(opts))) {}

Solver::~Solver() = default;

SolveEvent Solver::next() { return impl_->next(); }

const Stats& Solver::stats() const { return impl_->stats; }

std::vector<SolveEvent> solve_all(const hohh::Program& program, const Formula& goal,
                                  SolveOptions opts, std::size_t max_answers) {
  Solver s(program, goal, std::move(opts));
  std::vector<SolveEvent> out;
  for (;;) {
    SolveEvent e = s.next();
    const bool terminal = e.kind == SolveEvent::Kind::exhausted ||
                          e.kind == SolveEvent::Kind::budget_exhausted;
    out.push_back(std::move(e));
    if (terminal || out.size() >= max_answers) return out;
  }
}

SolveEvent solve_iterative(const hohh::Program& program, const Formula& goal,
                           SolveOptions opts, std::uint32_t max_depth) {
  SolveEvent last{SolveEvent::Kind::exhausted, std::nullopt, {}, {}};
  for (std::uint32_t d = 1; d <= max_depth; ++d) {
    opts.max_depth = d;
    Solver s(program, goal, opts);
    last = s.next();
    if (last.kind == SolveEvent::Kind::answer ||
        last.kind == SolveEvent::Kind::budget_exhausted)
      return last;
    if (last.kind == SolveEvent::Kind::exhausted && last.stats.depth_cutoffs == 0) return last;
  }
  return last;
}

bool replay(const hohh::Program& program, const Formula& goal, const Answer& answer) {
  auto index = index_program(program);
  Formula g0 = map_metas(goal, [&](const HTerm& m) {
    auto it = answer.by_id.find(m.id());
    return it == answer.by_id.end() ? m : it->second;
  });
  Goals goals = push(GoalNode{g0, nullptr, 0, 0}, nullptr);
  std::size_t pos = 0;
  try {
    while (goals) {
      GoalNode g = goals->goal;
      Goals rest = goals->next;
      switch (g.formula.kind()) {
        case FormulaKind::top:
          goals = rest;
          continue;
        case FormulaKind::implies: {
          auto clause = std::make_shared<const Clause>(hohh::clausify(g.formula.lhs()));
          HypList hyps = std::make_shared<const Hyp>(Hyp{clause, g.hyps});
          goals = push(GoalNode{g.formula.rhs(), hyps, g.level, g.depth}, rest);
          continue;
        }
        case FormulaKind::forall: {
          if (pos >= answer.trace.size()) return false;
          const TraceStep& s = answer.trace[pos++];
          if (s.kind != TraceStep::Kind::eigen) return false;
          HTerm c = hohh::hconst(s.eigen, g.formula.type(), g.level + 1);
          goals = push(GoalNode{hohh::instantiate(g.formula.body(), c), g.hyps, g.level + 1,
                                g.depth},
                       rest);
          continue;
        }
        case FormulaKind::atom:
          break;
      }
      if (pos >= answer.trace.size()) return false;
      const TraceStep& s = answer.trace[pos++];
      if (s.kind != TraceStep::Kind::backchain) return false;
      HTerm atom = hohh::normalize(g.formula.atom());
      const HTerm& head = hohh::head_of(atom);
      if (!head.is(TermKind::constant)) return false;
      auto cands = candidates(g.hyps, head.name(), index);
      if (s.candidate >= cands.size()) return false;
      const Clause& clause = *cands[s.candidate];
      if (s.values.size() != clause.quants.size()) return false;
      for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (max_const_level(s.values[i]) > g.level) return false;
        if (!(hohh::type_of(s.values[i]) == clause.quants[i].type)) return false;
      }
      HTerm inst = hohh::normalize(
          hohh::instantiate_bvars(clause.head, scope_values(s.values, s.values.size())));
      if (!hohh::alpha_equal(inst, atom)) return false;
      goals = push_premises(clause, s.values, g, rest);
    }
  } catch (const std::exception&) {
    return false;
  }
  return pos == answer.trace.size();
}

}  // namespace lf2hh::engine
