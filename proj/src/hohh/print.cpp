#include "lf2hh/hohh/print.hpp"

namespace lf2hh::hohh {

std::string Printer::term(const HTerm& t) { return term(t, 0); }
std::string Printer::formula(const Formula& f) { return formula(f, 0); }

bool Printer::taken(const std::string& n) const {
  if (reserved_.count(n)) return true;
  for (const auto& m : names_)
    if (m == n) return true;
  return false;
}

std::string Printer::bind(const std::string& hint) {
  std::string root = hint.empty() ? "x" : hint;
  std::string name = root;
  for (int i = 1; taken(name); ++i) name = root + std::to_string(i);
  names_.push_back(name);
  return name;
}

std::string Printer::term(const HTerm& t, int level) {
  switch (t.kind()) {
    case TermKind::constant:
      return t.name();
    case TermKind::meta:
      return t.name().empty() ? "_M" + std::to_string(t.id()) : t.name();
    case TermKind::bvar:
      if (t.index() < names_.size()) return names_[names_.size() - 1 - t.index()];
      return "^" + std::to_string(t.index());
    case TermKind::abs: {
      std::string x = bind(t.hint());
      std::string s = x + "\\ " + term(t.body(), 0);
      names_.pop_back();
      return level > 0 ? "(" + s + ")" : s;
    }
    case TermKind::app: {
      std::string s = term(t.head(), 1);
      for (const auto& a : t.args()) s += " " + term(a, 1);
      return level > 0 ? "(" + s + ")" : s;
    }
  }
  return "?";
}

std::string Printer::formula(const Formula& f, int level) {
  switch (f.kind()) {
    case FormulaKind::top:
      return "true";
    case FormulaKind::atom:
      return term(f.atom(), 0);
    case FormulaKind::implies: {
      std::string s = formula(f.lhs(), 1) + " => " + formula(f.rhs(), 0);
      return level > 0 ? "(" + s + ")" : s;
    }
    case FormulaKind::forall: {
      std::string x = bind(f.hint());
      std::string s = "pi " + x + "\\ " + formula(f.body(), 0);
      names_.pop_back();
      return level > 0 ? "(" + s + ")" : s;
    }
  }
  return "?";
}

std::string to_string(const HTerm& t) { return Printer().term(t); }
std::string to_string(const Formula& f) { return Printer().formula(f); }
std::string to_string(const Clause& c) { return Printer().formula(unclausify(c)) + "."; }

std::string to_string(const Program& p) {
  std::set<std::string> reserved;
  for (const auto& d : p.signature) reserved.insert(d.name);
  std::string out;
  for (const auto& d : p.signature)
    out += "type " + d.name + " " + to_string(d.type) + ".\n";
  out += "\n";
  for (const auto& c : p.clauses) {
    Printer printer(reserved);
    out += printer.formula(unclausify(c)) + ".\n";
  }
  return out;
}

}  // namespace lf2hh::hohh
