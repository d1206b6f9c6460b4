#ifndef LF2HH_LF_EXPR_HPP
#define LF2HH_LF_EXPR_HPP

// LF expressions in locally nameless form: free variables (signature
// constants and opened binders) carry names, bound variables are de Bruijn
// indices. Binder names are display hints only, so structural equality of two
// expressions is alpha-equivalence.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lf2hh::lf {

enum class ExprKind : std::uint8_t { type, var, bvar, pi, lam, app };

class Expr {
 public:
  Expr() = default;

  ExprKind kind() const;
  bool is(ExprKind k) const { return node_ && kind() == k; }
  explicit operator bool() const { return node_ != nullptr; }

  // var: the variable name. pi/lam: the binder's display name.
  const std::string& name() const;
  // bvar only.
  std::size_t index() const;
  // pi: domain; lam: annotation.
  const Expr& domain() const;
  // pi/lam only.
  const Expr& body() const;
  // app only.
  const Expr& fn() const;
  const Expr& arg() const;

  bool same_node(const Expr& other) const { return node_ == other.node_; }

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  friend Expr type();
  friend Expr var(std::string name);
  friend Expr bvar(std::size_t index);
  friend Expr pi(std::string name, Expr domain, Expr body);
  friend Expr lam(std::string name, Expr annot, Expr body);
  friend Expr app(Expr fn, Expr arg);

  std::shared_ptr<const Node> node_;
};

Expr type();
Expr var(std::string name);
Expr bvar(std::size_t index);
// `body` is already in de Bruijn form: index 0 refers to this binder.
Expr pi(std::string name, Expr domain, Expr body);
Expr lam(std::string name, Expr annot, Expr body);
Expr app(Expr fn, Expr arg);
Expr app(Expr fn, std::span<const Expr> args);
Expr app(Expr fn, std::initializer_list<Expr> args);

// Binder builders that abstract the named variable out of `body`.
Expr pi_over(const std::string& name, Expr domain, const Expr& body);
Expr lam_over(const std::string& name, Expr annot, const Expr& body);
// Non-dependent function type A -> B.
Expr arrow(Expr domain, Expr codomain);

struct Spine {
  Expr head;
  std::vector<Expr> args;
};
Spine spine(const Expr& e);

// Adds `delta` to every bvar index >= cutoff.
Expr shift(const Expr& e, std::ptrdiff_t delta, std::size_t cutoff = 0);
// Replaces bvar 0 of a binder body with `value` and lowers the other loose
// indices by one.
Expr instantiate(const Expr& body, const Expr& value);
// Opens a binder body with a free variable.
Expr open(const Expr& body, const std::string& name);
// Turns free occurrences of `name` into bvar 0 (the body of a new binder).
Expr abstract(const Expr& e, const std::string& name);

// Simultaneous capture-avoiding substitution of free variables. Sort checking
// is available through the Context overload in context.hpp.
Expr substitute(const Expr& e,
                std::span<const std::pair<std::string, Expr>> bindings);

std::set<std::string> free_vars(const Expr& e);
bool occurs_free(const Expr& e, const std::string& name);
// True when bvar `index` (relative to the top of `e`) occurs.
bool has_loose_bvar(const Expr& e, std::size_t index);
bool is_locally_closed(const Expr& e);

bool alpha_equal(const Expr& a, const Expr& b);
// Alpha-equivalence modulo eta on beta-normal inputs.
bool equal_upto_eta(const Expr& a, const Expr& b);

inline constexpr std::uint64_t kDefaultFuel = 1'000'000;

// Beta normal form; throws NonTerminationGuard after `fuel` contractions.
Expr beta_normalize(const Expr& e, std::uint64_t fuel = kDefaultFuel);
bool is_beta_normal(const Expr& e);

// Number of leading Pi binders.
std::size_t pi_prefix_length(const Expr& e);

std::size_t size(const Expr& e);

}  // namespace lf2hh::lf

#endif  // LF2HH_LF_EXPR_HPP
