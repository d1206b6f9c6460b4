#ifndef LF2HH_TRANSLATE_ENCODE_HPP
#define LF2HH_TRANSLATE_ENCODE_HPP

#include <string>
#include <vector>

#include "lf2hh/hohh/term.hpp"
#include "lf2hh/hohh/type.hpp"
#include "lf2hh/lf/context.hpp"
#include "lf2hh/lf/expr.hpp"

namespace lf2hh::translate {

// lf-obj for base types, lf-type for Type, arrows for Pi. Throws
// CanonicityError on anything else.
hohh::SimpleType phi(const lf::Expr& p);

// A named LF variable that is represented in hohh by a bound variable, such
// as a Pi binder that became a quantifier. Position i of a binder list is
// hohh bvar (size - 1 - i) at the top of the encoded term.
struct Binder {
  std::string name;
  lf::Expr type;
};

// Encodes a canonical LF object or base type. Free variables must be either
// signature constants of `ctx` (encoded as level-0 constants) or `binders`.
// Lambda annotations are erased to their simple types. Throws
// CanonicityError when the input is not beta-normal or some variable
// occurrence is not fully applied.
hohh::HTerm encode(const lf::Expr& e, const lf::Context& ctx,
                   const std::vector<Binder>& binders = {});

// The hohh constant for an LF signature constant.
hohh::HTerm constant_for(const lf::Entry& entry);

// Lower-case variable hint for a binder: its own name, or the initial of
// its domain's head when the binder is anonymous.
std::string binder_hint(const std::string& name, const lf::Expr& domain);

}  // namespace lf2hh::translate

#endif  // LF2HH_TRANSLATE_ENCODE_HPP
