#include "lf2hh/lf/context.hpp"

#include <atomic>

#include "lf2hh/error.hpp"

namespace lf2hh::lf {

void Context::add(std::string name, const Expr& classifier) {
  Expr c = beta_normalize(classifier);
  EntryKind k = is_kind_expr(c) ? EntryKind::kind_assign : EntryKind::type_assign;
  index_[name] = entries_.size();
  entries_.push_back(Entry{std::move(name), std::move(c), k});
}

const Entry* Context::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

Context Context::prefix(std::size_t n) const {
  Context out;
  for (std::size_t i = 0; i < n && i < entries_.size(); ++i) {
    out.index_[entries_[i].name] = i;
    out.entries_.push_back(entries_[i]);
  }
  return out;
}

bool is_kind_expr(const Expr& e) {
  Expr cur = e;
  while (cur.is(ExprKind::pi)) cur = cur.body();
  return cur.is(ExprKind::type);
}

const Entry* Scope::find(const std::string& name) const {
  for (auto it = locals_.rbegin(); it != locals_.rend(); ++it)
    if (it->name == name) return &*it;
  return base_->find(name);
}

void Scope::push(std::string name, Expr type) {
  locals_.push_back(Entry{std::move(name), std::move(type), EntryKind::type_assign});
}

std::string fresh_name(const std::string& hint) {
  static std::atomic<std::uint64_t> counter{0};
  std::string root = display_root(hint);
  if (root.empty()) root = "x";
  return root + "#" + std::to_string(++counter);
}

std::string display_root(const std::string& name) {
  auto pos = name.find('#');
  return pos == std::string::npos ? name : name.substr(0, pos);
}

namespace {

Sort sort_rec(const Expr& e, const Scope& scope) {
  switch (e.kind()) {
    case ExprKind::type:
      return Sort::kind;
    case ExprKind::bvar:
      return Sort::object;
    case ExprKind::var: {
      const Entry* entry = scope.find(e.name());
      return entry && entry->kind == EntryKind::kind_assign ? Sort::family
                                                            : Sort::object;
    }
    case ExprKind::pi:
      return sort_rec(e.body(), scope) == Sort::kind ? Sort::kind : Sort::family;
    case ExprKind::lam:
      return sort_rec(e.body(), scope);
    case ExprKind::app:
      return sort_rec(e.fn(), scope);
  }
  return Sort::object;
}

}  // namespace

Sort sort_of(const Expr& e, const Scope& scope) { return sort_rec(e, scope); }

Sort sort_of(const Expr& e, const Context& ctx) {
  Scope scope(ctx);
  return sort_rec(e, scope);
}

const char* to_string(Sort s) {
  switch (s) {
    case Sort::kind:
      return "kind";
    case Sort::family:
      return "family";
    case Sort::object:
      return "object";
  }
  return "?";
}

Expr substitute(const Expr& e,
                std::span<const std::pair<std::string, Expr>> bindings,
                const Context& ctx) {
  for (const auto& [name, value] : bindings) {
    const Entry* entry = ctx.find(name);
    Sort expected = entry && entry->kind == EntryKind::kind_assign ? Sort::family
                                                                   : Sort::object;
    Sort actual = sort_of(value, ctx);
    if (actual != expected)
      throw SortError("cannot replace " + std::string(to_string(expected)) +
                      " variable '" + name + "' by " + to_string(actual));
  }
  return substitute(e, bindings);
}

}  // namespace lf2hh::lf
