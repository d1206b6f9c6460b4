#ifndef LF2HH_FRONTEND_PARSER_HPP
#define LF2HH_FRONTEND_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "lf2hh/error.hpp"
#include "lf2hh/lf/context.hpp"
#include "lf2hh/lf/expr.hpp"

namespace lf2hh::frontend {

struct SourceDecl {
  std::string name;
  lf::Expr classifier;
  std::string text;  // classifier source text
  SourcePos begin;   // position of the declared name
  SourcePos end;     // position of the terminating '.'
};

struct SourceSignature {
  std::string file;
  std::vector<SourceDecl> declarations;
};

// Concrete syntax: `name : A.` declarations, `type`, `{x:A} B`, `[x:A] M`,
// right-associative `A -> B`, left-associative `B <- A`, application by
// juxtaposition. Throws SyntaxError for malformed input, unbound names,
// unannotated binders, free (implicit) variables and re-declarations.
SourceSignature parse_source(std::string_view text, std::string file = "");
lf::Context parse_signature(std::string_view text);
lf::Context to_context(const SourceSignature& sig);

// A single expression over the constants of `ctx`; a trailing '.' is allowed.
lf::Expr parse_query(std::string_view text, const lf::Context& ctx);

}  // namespace lf2hh::frontend

#endif  // LF2HH_FRONTEND_PARSER_HPP
