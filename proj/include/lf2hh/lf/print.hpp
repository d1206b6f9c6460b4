#ifndef LF2HH_LF_PRINT_HPP
#define LF2HH_LF_PRINT_HPP

#include <string>

#include "lf2hh/lf/context.hpp"
#include "lf2hh/lf/expr.hpp"

namespace lf2hh::lf {

// Concrete syntax accepted by the parser: `type`, `{x:A} B`, `[x:A] M`,
// `A -> B` for a Pi whose variable does not occur, application by
// juxtaposition. Bound variables get their binder's name unless that would
// clash, in which case a numeric suffix is added.
std::string to_string(const Expr& e);

// One `name : classifier.` line per entry.
std::string to_string(const Context& ctx);

}  // namespace lf2hh::lf

#endif  // LF2HH_LF_PRINT_HPP
