#ifndef LF2HH_EXTRACT_DECODE_HPP
#define LF2HH_EXTRACT_DECODE_HPP

#include "lf2hh/hohh/term.hpp"
#include "lf2hh/lf/context.hpp"
#include "lf2hh/lf/expr.hpp"
#include "lf2hh/lf/typing.hpp"

namespace lf2hh::extract {

// Reads a closed, metavariable-free hohh term back as a canonical LF object,
// guided by the expected type: abstractions take their annotation from the
// Pi domain (eta-expanding when the term is not an abstraction), and each
// argument of an application is read at the declared type of the head after
// substituting the preceding arguments. The result is not type checked;
// see verify_witness. Throws DecodeError.
lf::Expr decode(const hohh::HTerm& t, const lf::Expr& expected, const lf::Context& ctx);

// Γ ⊢ M : A by the reference checker.
lf::CheckReport verify_witness(const lf::Context& ctx, const lf::Expr& m, const lf::Expr& a);

}  // namespace lf2hh::extract

#endif  // LF2HH_EXTRACT_DECODE_HPP
