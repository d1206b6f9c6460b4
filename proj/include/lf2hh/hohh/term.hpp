#ifndef LF2HH_HOHH_TERM_HPP
#define LF2HH_HOHH_TERM_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lf2hh/hohh/type.hpp"

namespace lf2hh::hohh {

enum class TermKind : std::uint8_t { constant, meta, bvar, abs, app };

// Simply typed lambda terms in spine form. Constants and metavariables carry
// their simple type and a level: the signature stage at which they were
// introduced. Bound variables are de Bruijn indices.
class HTerm {
 public:
  HTerm() = default;

  TermKind kind() const;
  bool is(TermKind k) const { return node_ && kind() == k; }
  explicit operator bool() const { return node_ != nullptr; }

  // constant / meta
  const std::string& name() const;
  const SimpleType& type() const;  // also the binder type of an abs
  std::uint32_t level() const;
  // meta only
  std::size_t id() const;
  // bvar only
  std::size_t index() const;
  // abs only
  const std::string& hint() const;
  const HTerm& body() const;
  // app only
  const HTerm& head() const;
  const std::vector<HTerm>& args() const;

  bool same_node(const HTerm& other) const { return node_ == other.node_; }

 private:
  struct Node;
  explicit HTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  friend HTerm hconst(std::string name, SimpleType type, std::uint32_t level);
  friend HTerm hmeta(std::size_t id, std::string name, SimpleType type,
                     std::uint32_t level);
  friend HTerm hbvar(std::size_t index);
  friend HTerm habs(SimpleType type, std::string hint, HTerm body);
  friend HTerm happ_raw(HTerm head, std::vector<HTerm> args);

  std::shared_ptr<const Node> node_;
};

HTerm hconst(std::string name, SimpleType type, std::uint32_t level = 0);
HTerm hmeta(std::size_t id, std::string name, SimpleType type, std::uint32_t level);
HTerm hbvar(std::size_t index);
HTerm habs(SimpleType type, std::string hint, HTerm body);
// Application without reduction; an app head has its arguments merged.
HTerm happ_raw(HTerm head, std::vector<HTerm> args);
// Application that contracts redexes hereditarily, so the result is beta
// normal whenever the inputs are.
HTerm happ(const HTerm& head, std::span<const HTerm> args);
HTerm happ(const HTerm& head, std::initializer_list<HTerm> args);

// Head and arguments of a term; a non-application has no arguments.
const HTerm& head_of(const HTerm& t);
std::span<const HTerm> args_of(const HTerm& t);

HTerm shift(const HTerm& t, std::ptrdiff_t delta, std::size_t cutoff = 0);
// Replaces bvar 0 of `body` with `value` (hereditarily reducing).
HTerm instantiate(const HTerm& body, const HTerm& value);

// Simultaneously replaces bvar j (j < values.size(), counted from `depth`)
// by values[j] and lowers the remaining loose indices by values.size().
HTerm instantiate_bvars(const HTerm& t, std::span<const HTerm> values,
                        std::size_t depth = 0);

bool alpha_equal(const HTerm& a, const HTerm& b);
bool has_loose_bvar(const HTerm& t, std::size_t index);
bool is_closed(const HTerm& t);
bool has_meta(const HTerm& t);
bool is_beta_normal(const HTerm& t);
std::size_t size(const HTerm& t);

// Simple type of `t` where `env` lists the types of the enclosing binders,
// innermost last. Throws SimpleTypeError on ill-typed input.
SimpleType type_of(const HTerm& t, std::vector<SimpleType>& env);
SimpleType type_of(const HTerm& t);

// Beta-eta-long normal form.
HTerm normalize(const HTerm& t, std::vector<SimpleType>& env);
HTerm normalize(const HTerm& t);
// Eta-long form of a beta-normal term `t` of type `ty`.
HTerm eta_expand(const HTerm& t, const SimpleType& ty, std::vector<SimpleType>& env);

}  // namespace lf2hh::hohh

#endif  // LF2HH_HOHH_TERM_HPP
