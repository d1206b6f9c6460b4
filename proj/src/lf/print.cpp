#include "lf2hh/lf/print.hpp"

#include <set>
#include <vector>

namespace lf2hh::lf {

namespace {

class Printer {
 public:
  explicit Printer(const Expr& root) : free_(free_vars(root)) {}

  std::string print(const Expr& e, int level) {
    switch (e.kind()) {
      case ExprKind::type:
        return "type";
      case ExprKind::var:
        return e.name();
      case ExprKind::bvar:
        if (e.index() < names_.size()) return names_[names_.size() - 1 - e.index()];
        return "^" + std::to_string(e.index());
      case ExprKind::pi:
        if (!has_loose_bvar(e.body(), 0)) {
          std::string s = print(e.domain(), 1) + " -> ";
          names_.push_back("_");
          s += print(e.body(), 0);
          names_.pop_back();
          return wrap(s, level > 0);
        }
        return wrap(binder('{', '}', e), level > 0);
      case ExprKind::lam:
        return wrap(binder('[', ']', e), level > 0);
      case ExprKind::app: {
        std::string s = print(e.fn(), 1) + " " + print(e.arg(), 2);
        return wrap(s, level > 1);
      }
    }
    return "?";
  }

 private:
  static std::string wrap(const std::string& s, bool parens) {
    return parens ? "(" + s + ")" : s;
  }

  std::string binder(char open, char close, const Expr& e) {
    std::string name = choose(e.name());
    std::string s(1, open);
    s += name + ":" + print(e.domain(), 0) + close + " ";
    names_.push_back(name);
    s += print(e.body(), 0);
    names_.pop_back();
    return s;
  }

  bool taken(const std::string& n) const {
    if (free_.count(n)) return true;
    for (const auto& m : names_)
      if (m == n) return true;
    return false;
  }

  std::string choose(const std::string& hint) {
    std::string root = display_root(hint);
    if (root.empty()) root = "x";
    if (!taken(root)) return root;
    for (int i = 1;; ++i) {
      std::string candidate = root + std::to_string(i);
      if (!taken(candidate)) return candidate;
    }
  }

  std::set<std::string> free_;
  std::vector<std::string> names_;
};

}  // namespace

std::string to_string(const Expr& e) {
  Printer p(e);
  return p.print(e, 0);
}

std::string to_string(const Context& ctx) {
  std::string out;
  for (const auto& entry : ctx.entries())
    out += entry.name + " : " + to_string(entry.classifier) + ".\n";
  return out;
}

}  // namespace lf2hh::lf
