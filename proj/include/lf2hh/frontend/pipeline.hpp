#ifndef LF2HH_FRONTEND_PIPELINE_HPP
#define LF2HH_FRONTEND_PIPELINE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lf2hh/engine/solver.hpp"
#include "lf2hh/error.hpp"
#include "lf2hh/hohh/formula.hpp"
#include "lf2hh/lf/context.hpp"
#include "lf2hh/lf/typing.hpp"
#include "lf2hh/translate/translate.hpp"

namespace lf2hh::frontend {

class FileError : public Error {
 public:
  using Error::Error;
};

// A signature or query rejected by the reference checker.
class CheckFailed : public Error {
 public:
  explicit CheckFailed(const lf::CheckReport& r) : Error(r.message()), report(r) {}
  lf::CheckReport report;
};

std::string read_file(const std::string& path);

// Parses a signature file. Throws FileError or SyntaxError.
lf::Context load_signature(const std::string& path);

// Checks a parsed signature and returns its canonical form. Throws
// CheckFailed.
lf::Context prepare(const lf::Context& raw);

// Checks Γ ⊢ A : Type and returns the canonical form of A. Throws
// CheckFailed.
lf::Expr prepare_query(const lf::Context& ctx, const lf::Expr& a);

std::string translate_text(const lf::Context& ctx, translate::TranslateOptions opts);

struct Witness {
  engine::Answer answer;
  bool residual = false;
  std::string residual_detail;
  std::optional<lf::Expr> decoded;
  std::string decode_error;
  lf::CheckReport verification;
  bool verified = false;
};

struct QueryOutcome {
  lf::Expr query;
  std::vector<Witness> answers;
  // Terminal event, if the search ended before max_answers were collected.
  std::optional<engine::SolveEvent::Kind> terminal;
  engine::Stats stats;
  bool any_verified() const;
};

struct QueryConfig {
  translate::TranslateOptions translation;
  engine::SolveOptions search;
  std::size_t max_answers = 1;
  bool verify = true;
};

// Solves "find M with Γ ⊢ M : A" for a canonical signature and a canonical
// query type: translates both, searches, decodes each answer and, when
// asked, verifies it with the reference checker.
QueryOutcome solve_query(const lf::Context& ctx, const lf::Expr& a, const QueryConfig& cfg);

}  // namespace lf2hh::frontend

#endif  // LF2HH_FRONTEND_PIPELINE_HPP
