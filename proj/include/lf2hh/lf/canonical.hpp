#ifndef LF2HH_LF_CANONICAL_HPP
#define LF2HH_LF_CANONICAL_HPP

#include "lf2hh/lf/context.hpp"
#include "lf2hh/lf/expr.hpp"

namespace lf2hh::lf {

// Eta-long form of a beta-normal, well-typed `e` whose classifier is
// `classifier` (a type for objects, a kind for families). Pass type() as the
// classifier of a type and any value for a kind (kinds are canonicalized
// structurally). Throws ClassifierError when `e` does not fit.
Expr canonicalize(const Expr& e, const Expr& classifier, const Context& ctx);
Expr canonicalize(const Expr& e, const Expr& classifier, Scope& scope);

// Canonicalizes a type or kind. Throws ClassifierError on ill-formed input.
Expr canonicalize_classifier(const Expr& e, const Context& ctx);
Expr canonicalize_classifier(const Expr& e, Scope& scope);

// Canonicalizes every classifier of a checked context.
Context canonicalize_context(const Context& ctx);

// Beta-normal and every variable occurrence fully applied. Throws
// UnboundVariable for a free name missing from `ctx`.
bool is_canonical(const Expr& e, const Context& ctx);
bool is_canonical(const Context& ctx);

}  // namespace lf2hh::lf

#endif  // LF2HH_LF_CANONICAL_HPP
