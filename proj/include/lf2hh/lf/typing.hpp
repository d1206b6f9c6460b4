#ifndef LF2HH_LF_TYPING_HPP
#define LF2HH_LF_TYPING_HPP

#include <optional>
#include <string>
#include <vector>

#include "lf2hh/lf/context.hpp"
#include "lf2hh/lf/expr.hpp"

namespace lf2hh::lf {

// Outcome of deciding one of the four LF assertions. On failure, `rule` is
// the rule being attempted, `assertion` the sub-assertion it could not
// establish and `reason` a human-readable cause.
struct CheckReport {
  bool ok = true;
  std::string rule;
  std::string assertion;
  std::string reason;
  std::vector<std::string> trace;

  explicit operator bool() const { return ok; }
  std::string message() const;
};

struct CheckOptions {
  bool record_trace = false;
};

// Rule names in `trace` are the usual ones: null-ctx, kind-ctx, type-ctx,
// type-kind, pi-kind, var-fam, pi-fam, abs-fam, app-fam, var-obj, abs-obj,
// app-obj. A duplicate declaration fails with reason "DuplicateBinding".
CheckReport check_context(const Context& ctx, CheckOptions opts = {});

// The following assume check_context(ctx) succeeded.
CheckReport check_kind(const Context& ctx, const Expr& k, CheckOptions opts = {});
CheckReport check_family(const Context& ctx, const Expr& a, const Expr& k,
                         CheckOptions opts = {});
// Shorthand for check_family(ctx, a, type()).
CheckReport check_type(const Context& ctx, const Expr& a, CheckOptions opts = {});
// `a` is normalized before comparison, so any well-formed type is accepted.
CheckReport check_object(const Context& ctx, const Expr& m, const Expr& a,
                         CheckOptions opts = {});

struct Inferred {
  Expr classifier;  // beta-normal; empty on failure
  CheckReport report;
};

Inferred infer_kind(const Context& ctx, const Expr& a, CheckOptions opts = {});
Inferred infer_type(const Context& ctx, const Expr& m, CheckOptions opts = {});

}  // namespace lf2hh::lf

#endif  // LF2HH_LF_TYPING_HPP
