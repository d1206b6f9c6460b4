#ifndef LF2HH_HOHH_PRINT_HPP
#define LF2HH_HOHH_PRINT_HPP

#include <set>
#include <string>
#include <vector>

#include "lf2hh/hohh/formula.hpp"
#include "lf2hh/hohh/term.hpp"

namespace lf2hh::hohh {

// Line-oriented program text: `pi x\ F` for quantifiers, `A => B` for
// implication (right associative), `true` for top, `x\ t` for abstraction.
// Bound variables print as their binder hint, with a numeric suffix when the
// hint is empty-derived or would clash with a reserved name or an enclosing
// binder.
class Printer {
 public:
  Printer() = default;
  explicit Printer(std::set<std::string> reserved) : reserved_(std::move(reserved)) {}

  std::string term(const HTerm& t);
  std::string formula(const Formula& f);

 private:
  std::string term(const HTerm& t, int level);
  std::string formula(const Formula& f, int level);
  std::string bind(const std::string& hint);
  bool taken(const std::string& n) const;

  std::set<std::string> reserved_;
  std::vector<std::string> names_;
};

std::string to_string(const HTerm& t);
std::string to_string(const Formula& f);
std::string to_string(const Clause& c);

// `type name T.` lines, a blank line, then one clause per line.
std::string to_string(const Program& p);

}  // namespace lf2hh::hohh

#endif  // LF2HH_HOHH_PRINT_HPP
