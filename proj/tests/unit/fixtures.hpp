#ifndef LF2HH_TESTS_UNIT_FIXTURES_HPP
#define LF2HH_TESTS_UNIT_FIXTURES_HPP

#include <string>

#include "lf2hh/frontend/parser.hpp"
#include "lf2hh/frontend/pipeline.hpp"
#include "lf2hh/lf/context.hpp"
#include "lf2hh/lf/expr.hpp"

namespace lf2hh::unit {

inline const std::string kCorpus = LF2HH_CORPUS_DIR;
inline const std::string kGolden = LF2HH_GOLDEN_DIR;

inline const char* kAppendQuery =
    "append (cons z nil) (cons (s z) nil) (cons z (cons (s z) nil))";
inline const char* kAppendWitness =
    "appCons z nil (cons (s z) nil) (cons (s z) nil) (appNil (cons (s z) nil))";

// The checked, canonical list-append signature.
inline lf::Context append_ctx() {
  static const lf::Context ctx =
      frontend::prepare(frontend::load_signature(kCorpus + "/append.elf"));
  return ctx;
}

// Parses an expression over `ctx` without checking it.
inline lf::Expr parse(const lf::Context& ctx, const std::string& text) {
  return frontend::parse_query(text, ctx);
}

inline lf::Expr v(const std::string& name) { return lf::var(name); }

}  // namespace lf2hh::unit

#endif  // LF2HH_TESTS_UNIT_FIXTURES_HPP
