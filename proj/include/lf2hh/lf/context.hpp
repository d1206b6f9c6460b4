#ifndef LF2HH_LF_CONTEXT_HPP
#define LF2HH_LF_CONTEXT_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lf2hh/lf/expr.hpp"

namespace lf2hh::lf {

enum class EntryKind : std::uint8_t { kind_assign, type_assign };

struct Entry {
  std::string name;
  Expr classifier;
  EntryKind kind;
};

// An ordered signature. Classifiers are stored beta-normalized. Duplicate
// names are representable so that context checking can report them; lookup
// returns the most recent entry of a name.
class Context {
 public:
  Context() = default;

  // Classifies the entry as a kind or a type assignment from the shape of
  // `classifier` and appends it.
  void add(std::string name, const Expr& classifier);

  const Entry* find(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name) != nullptr; }

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }

  // The first `n` entries as a context of their own.
  Context prefix(std::size_t n) const;

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// True for Type and Pi-chains ending in Type.
bool is_kind_expr(const Expr& e);

// A context extended with locally opened binders.
class Scope {
 public:
  explicit Scope(const Context& base) : base_(&base) {}

  const Entry* find(const std::string& name) const;
  void push(std::string name, Expr type);
  void pop() { locals_.pop_back(); }
  std::size_t local_count() const { return locals_.size(); }
  const Context& base() const { return *base_; }

 private:
  const Context* base_;
  std::vector<Entry> locals_;
};

// A name derived from `hint` that the parser can never produce.
std::string fresh_name(const std::string& hint);
// Strips the suffix added by fresh_name.
std::string display_root(const std::string& name);

enum class Sort : std::uint8_t { kind, family, object };

// Syntactic category of `e`; names missing from the scope count as objects.
Sort sort_of(const Expr& e, const Scope& scope);
Sort sort_of(const Expr& e, const Context& ctx);
const char* to_string(Sort s);

// Substitution that checks each replacement against the sort of the variable
// it replaces (family for kind-assigned names, object otherwise).
Expr substitute(const Expr& e,
                std::span<const std::pair<std::string, Expr>> bindings,
                const Context& ctx);

}  // namespace lf2hh::lf

#endif  // LF2HH_LF_CONTEXT_HPP
