#ifndef LF2HH_ENGINE_SOLVER_HPP
#define LF2HH_ENGINE_SOLVER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lf2hh/engine/unify.hpp"
#include "lf2hh/hohh/formula.hpp"
#include "lf2hh/hohh/term.hpp"

namespace lf2hh::engine {

struct Stats {
  std::uint64_t backchain_steps = 0;
  std::uint64_t decide_attempts = 0;
  std::uint64_t unify_calls = 0;
  std::uint64_t depth_cutoffs = 0;
  std::uint64_t residual_branches = 0;
};

struct SolveOptions {
  // Successful backchains allowed before the search reports budget
  // exhaustion.
  std::uint64_t max_steps = 100'000;
  // Maximum nesting of backchains along a branch; unlimited when empty.
  std::optional<std::uint32_t> max_depth;
  // Name of the goal metavariable whose binding is the witness. When empty,
  // the first metavariable of the goal is used.
  std::string witness;
};

// One step of a successful branch, in the order the search took it.
struct TraceStep {
  enum class Kind : std::uint8_t { backchain, eigen } kind;
  // backchain: index into the candidate list (hypotheses newest first, then
  // program clauses in order) and the resolved quantifier instances.
  std::size_t candidate = 0;
  std::vector<hohh::HTerm> values;
  // eigen: the constant introduced for a universal goal.
  std::string eigen;
};

struct Answer {
  // Goal metavariables by name, resolved and beta-eta normalized.
  std::map<std::string, hohh::HTerm> bindings;
  // The same bindings keyed by the metavariable ids used in the goal.
  std::map<std::size_t, hohh::HTerm> by_id;
  // Binding of the designated metavariable (empty if the goal has none).
  hohh::HTerm witness;
  Stats stats;
  std::vector<TraceStep> trace;
};

struct SolveEvent {
  enum class Kind : std::uint8_t { answer, residual, exhausted, budget_exhausted } kind;
  // Set for answer and residual. A residual answer satisfies the goal only
  // if its delayed pairs (described in `detail`) are solvable.
  std::optional<Answer> answer;
  std::string detail;
  Stats stats;
};

const char* to_string(SolveEvent::Kind k);

// Depth-first search for proofs of a goal formula. Metavariables in the goal
// may use any ids; they are renumbered into the solver's own store.
class Solver {
 public:
  Solver(const hohh::Program& program, const hohh::Formula& goal, SolveOptions opts = {});
  ~Solver();
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  // Next answer or terminal event. After `exhausted` or `budget_exhausted`
  // the same event is returned again.
  SolveEvent next();
  const Stats& stats() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Collects events until the first terminal one, or until `max_answers`
// answers (residuals included) have been seen.
std::vector<SolveEvent> solve_all(const hohh::Program& program, const hohh::Formula& goal,
                                  SolveOptions opts, std::size_t max_answers);

// Runs the search with depth bounds 1..max_depth and returns the first event
// that is an answer, or the last terminal event.
SolveEvent solve_iterative(const hohh::Program& program, const hohh::Formula& goal,
                           SolveOptions opts, std::uint32_t max_depth);

// Re-derives `goal` with the answer's bindings and trace, using syntactic
// comparison only (no unification, no search). Also checks that every
// quantifier instance respects the level of the goal it was used in.
bool replay(const hohh::Program& program, const hohh::Formula& goal, const Answer& answer);

}  // namespace lf2hh::engine

#endif  // LF2HH_ENGINE_SOLVER_HPP
