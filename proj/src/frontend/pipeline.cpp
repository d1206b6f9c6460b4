#include "lf2hh/frontend/pipeline.hpp"

#include <fstream>
#include <sstream>

#include "lf2hh/extract/decode.hpp"
#include "lf2hh/frontend/parser.hpp"
#include "lf2hh/hohh/print.hpp"
#include "lf2hh/lf/canonical.hpp"
#include "lf2hh/translate/encode.hpp"

namespace lf2hh::frontend {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw FileError("cannot read '" + path + "'");
  return ss.str();
}

lf::Context load_signature(const std::string& path) {
  std::string text = read_file(path);
  return to_context(parse_source(text, path));
}

lf::Context prepare(const lf::Context& raw) {
  lf::CheckReport r = lf::check_context(raw);
  if (!r) throw CheckFailed(r);
  return lf::canonicalize_context(raw);
}

lf::Expr prepare_query(const lf::Context& ctx, const lf::Expr& a) {
  lf::CheckReport r = lf::check_type(ctx, a);
  if (!r) throw CheckFailed(r);
  return lf::canonicalize_classifier(lf::beta_normalize(a), ctx);
}

std::string translate_text(const lf::Context& ctx, translate::TranslateOptions opts) {
  return hohh::to_string(translate::translate_signature(ctx, opts));
}

bool QueryOutcome::any_verified() const {
  for (const auto& w : answers)
    if (w.verified) return true;
  return false;
}

QueryOutcome solve_query(const lf::Context& ctx, const lf::Expr& a, const QueryConfig& cfg) {
  QueryOutcome out;
  out.query = a;
  translate::Translator tr(ctx, cfg.translation);
  hohh::HTerm m = hohh::hmeta(0, "M", translate::phi(a), 0);
  hohh::Formula goal = tr.goal(a, m);
  hohh::Program program = tr.program();
  engine::SolveOptions search = cfg.search;
  search.witness = "M";
  auto events = engine::solve_all(program, goal, search, cfg.max_answers);
  for (auto& ev : events) {
    out.stats = ev.stats;
    if (ev.kind != engine::SolveEvent::Kind::answer &&
        ev.kind != engine::SolveEvent::Kind::residual) {
      out.terminal = ev.kind;
      continue;
    }
    Witness w;
    w.answer = std::move(*ev.answer);
    w.residual = ev.kind == engine::SolveEvent::Kind::residual;
    w.residual_detail = ev.detail;
    if (!w.residual) {
      try {
        w.decoded = extract::decode(w.answer.witness, a, ctx);
      } catch (const Error& e) {
        w.decode_error = e.what();
      }
      if (w.decoded && cfg.verify) {
        w.verification = extract::verify_witness(ctx, *w.decoded, a);
        w.verified = w.verification.ok;
      }
    }
    out.answers.push_back(std::move(w));
  }
  return out;
}

}  // namespace lf2hh::frontend
