#ifndef LF2HH_ENGINE_UNIFY_HPP
#define LF2HH_ENGINE_UNIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lf2hh/hohh/term.hpp"
#include "lf2hh/hohh/type.hpp"

namespace lf2hh::engine {

// Metavariable cells with an undo trail. A meta's id indexes its cell; the
// level stored here is authoritative (the level carried by the term node is
// informational).
class Store {
 public:
  struct Mark {
    std::size_t trail = 0;
    std::size_t cells = 0;
  };

  hohh::HTerm fresh(std::string name, hohh::SimpleType type, std::uint32_t level);
  void bind(std::size_t id, hohh::HTerm value);
  bool bound(std::size_t id) const { return static_cast<bool>(cells_[id].value); }
  const hohh::HTerm& value(std::size_t id) const { return cells_[id].value; }
  std::uint32_t level(std::size_t id) const { return cells_[id].level; }
  const hohh::SimpleType& type(std::size_t id) const { return cells_[id].type; }
  const std::string& name(std::size_t id) const { return cells_[id].name; }
  std::size_t size() const { return cells_.size(); }
  std::size_t trail_size() const { return trail_.size(); }

  Mark mark() const { return Mark{trail_.size(), cells_.size()}; }
  void undo(const Mark& m);

  // Follows bindings at the head until the head is not a bound meta.
  hohh::HTerm whnf(const hohh::HTerm& t) const;
  // Replaces every bound meta, recursively. Unchanged subterms are shared
  // with the input.
  hohh::HTerm resolve(const hohh::HTerm& t) const;
  // The same, reusing the resolved values of bare metas recorded in `memo`
  // across calls. Only valid while no binding changes.
  using ResolveMemo = std::unordered_map<std::size_t, hohh::HTerm>;
  hohh::HTerm resolve(const hohh::HTerm& t, ResolveMemo& memo) const;

 private:
  struct Cell {
    std::string name;
    hohh::SimpleType type;
    std::uint32_t level;
    hohh::HTerm value;
  };
  std::vector<Cell> cells_;
  std::vector<std::size_t> trail_;
};

// Top-level eta contraction: strips `x\ t x` layers where x does not occur
// in t.
hohh::HTerm eta_contract(const hohh::HTerm& t);

// Largest level of a constant occurring in `t` (0 when none).
std::uint32_t max_const_level(const hohh::HTerm& t);

enum class UnifyResult : std::uint8_t { ok, fail };

struct DelayedPair {
  hohh::HTerm lhs;
  hohh::HTerm rhs;
};

// Higher-order pattern unification over a Store. Pairs outside the pattern
// fragment are delayed and retried whenever new bindings appear; `ok` means
// no clash was found, possibly with pairs left in `delayed()`.
class Unifier {
 public:
  explicit Unifier(Store& store) : store_(store) {}

  UnifyResult unify(const hohh::HTerm& a, const hohh::HTerm& b);

  const std::vector<DelayedPair>& delayed() const { return delayed_; }
  std::vector<DelayedPair>& delayed() { return delayed_; }
  std::uint64_t calls() const { return calls_; }

 private:
  enum class Outcome : std::uint8_t { ok, fail, stuck };

  Outcome pair(const hohh::HTerm& a, const hohh::HTerm& b);
  Outcome flex_rigid(const hohh::HTerm& flex, const hohh::HTerm& other);
  Outcome flex_flex(const hohh::HTerm& a, const hohh::HTerm& b);
  UnifyResult retry_delayed();

  Store& store_;
  std::vector<DelayedPair> delayed_;
  std::uint64_t calls_ = 0;
};

}  // namespace lf2hh::engine

#endif  // LF2HH_ENGINE_UNIFY_HPP
