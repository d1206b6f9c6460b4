#ifndef LF2HH_TRANSLATE_TRANSLATE_HPP
#define LF2HH_TRANSLATE_TRANSLATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lf2hh/hohh/formula.hpp"
#include "lf2hh/hohh/term.hpp"
#include "lf2hh/lf/context.hpp"
#include "lf2hh/lf/expr.hpp"
#include "lf2hh/translate/encode.hpp"

namespace lf2hh::translate {

enum class Mode : std::uint8_t { simple, optimized };
enum class ProofArg : std::uint8_t { first, last };

struct TranslateOptions {
  Mode mode = Mode::optimized;
  // Optimized mode only: where the proof term goes in a specialized atom.
  ProofArg proof_arg = ProofArg::first;
  bool simplify_top = false;
  // Test-only: see RigidityEnv::relaxed_init.
  bool relaxed_init = false;
};

const char* to_string(Mode m);

// Translates types of a canonical, checked signature. Types passed in must
// be canonical relative to the signature; their free variables must be
// signature constants or listed in `binders`.
class Translator {
 public:
  Translator(const lf::Context& ctx, TranslateOptions opts);

  const lf::Context& context() const { return ctx_; }
  const TranslateOptions& options() const { return opts_; }

  hohh::HTerm encode(const lf::Expr& e, const std::vector<Binder>& binders = {}) const;

  // The goal formula expressing "M inhabits A": the simple translation in
  // simple mode, the negative optimized translation otherwise.
  hohh::Formula goal(const lf::Expr& a, const hohh::HTerm& m) const;
  // The program clause for a declaration c : A.
  hohh::Formula clause(const lf::Expr& a, const hohh::HTerm& m) const;

  // Simple translation of A applied to M.
  hohh::Formula simple(const lf::Expr& a, const hohh::HTerm& m,
                       std::vector<Binder>& binders) const;
  // Optimized translations. `pi_vars` are the names of the enclosing Pi
  // binders of the clause being built.
  hohh::Formula negative(const lf::Expr& a, const hohh::HTerm& m,
                         std::vector<Binder>& binders) const;
  hohh::Formula positive(const lf::Expr& a, const hohh::HTerm& m,
                         std::vector<Binder>& binders,
                         std::vector<std::string>& pi_vars) const;

  // Signature and clauses for the whole context, in declaration order.
  hohh::Program program() const;

  // The predicate constant for family `u` in optimized mode.
  hohh::HTerm predicate(const lf::Entry& family) const;
  static hohh::HTerm hastype();

 private:
  hohh::Formula base(const lf::Expr& a, const hohh::HTerm& m,
                     const std::vector<Binder>& binders) const;
  hohh::Formula finish(const hohh::Formula& f) const;

  const lf::Context& ctx_;
  TranslateOptions opts_;
};

// Free-function forms of the translations for a closed canonical type.
hohh::Formula simple_translate_type(const lf::Context& ctx, const lf::Expr& a,
                                    const hohh::HTerm& m);
hohh::Formula opt_translate_neg(const lf::Context& ctx, const lf::Expr& a,
                                const hohh::HTerm& m, TranslateOptions opts = {});
hohh::Formula opt_translate_pos(const lf::Context& ctx, const lf::Expr& a,
                                const hohh::HTerm& m, TranslateOptions opts = {});
hohh::Program translate_signature(const lf::Context& ctx, TranslateOptions opts);

}  // namespace lf2hh::translate

#endif  // LF2HH_TRANSLATE_TRANSLATE_HPP
