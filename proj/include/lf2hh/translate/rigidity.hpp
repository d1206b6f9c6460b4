#ifndef LF2HH_TRANSLATE_RIGIDITY_HPP
#define LF2HH_TRANSLATE_RIGIDITY_HPP

#include <set>
#include <string>

#include "lf2hh/lf/expr.hpp"

namespace lf2hh::translate {

// Judgment environment: `pi_vars` are the other Pi-bound variables of the
// type under consideration (they are instantiated at run time, so they are
// flexible), `local_binders` the lambda-bound variables entered on the way
// down, `target` the variable whose occurrence is examined. Free names in
// neither set are signature constants.
struct RigidityEnv {
  std::set<std::string> pi_vars;
  std::set<std::string> local_binders;
  std::string target;
  // Test-only weakening of the leaf rule: `target N...` counts as rigid for
  // arbitrary arguments. Unsound; exists to reproduce the counterexample
  // showing why the arguments must be distinct local binders.
  bool relaxed_init = false;
};

enum class RigidForm : std::uint8_t { type, object };

// Decides Gamma;x |-t e (form == type) or Gamma;delta;x |-o e (form ==
// object). `e` is a canonical expression whose free variables are named;
// binders inside `e` are opened on the way down.
bool rigid(const RigidityEnv& env, const lf::Expr& e, RigidForm form);

}  // namespace lf2hh::translate

#endif  // LF2HH_TRANSLATE_RIGIDITY_HPP
