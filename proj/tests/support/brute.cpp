#include "brute.hpp"

#include <functional>
#include <map>

namespace lf2hh::testing {

using hohh::HTerm;
using hohh::TermKind;

std::vector<HTerm> enumerate_terms(const hohh::Program& program, std::size_t max_size) {
  std::vector<const hohh::ConstDecl*> cons;
  for (const auto& d : program.signature)
    if (hohh::target(d.type).is(hohh::TypeKind::lf_obj)) cons.push_back(&d);
  // by_size[s]: all terms of exactly s symbols.
  std::vector<std::vector<HTerm>> by_size(max_size + 1);
  for (std::size_t s = 1; s <= max_size; ++s) {
    for (const auto* c : cons) {
      std::size_t k = hohh::arity(c->type);
      HTerm head = hohh::hconst(c->name, c->type, 0);
      if (k == 0) {
        if (s == 1) by_size[s].push_back(head);
        continue;
      }
      // Distribute s - 1 symbols over k arguments.
      std::vector<std::size_t> sizes(k, 1);
      std::function<void(std::size_t, std::size_t, std::vector<HTerm>&)> fill =
          [&](std::size_t i, std::size_t left, std::vector<HTerm>& args) {
            if (i == k) {
              if (left == 0) by_size[s].push_back(hohh::happ_raw(head, args));
              return;
            }
            for (std::size_t si = 1; si <= left; ++si) {
              for (const auto& t : by_size[si]) {
                args.push_back(t);
                fill(i + 1, left - si, args);
                args.pop_back();
              }
            }
          };
      std::vector<HTerm> args;
      if (s >= 1 + k) fill(0, s - 1, args);
    }
  }
  std::vector<HTerm> out;
  for (auto& v : by_size)
    for (auto& t : v) out.push_back(t);
  return out;
}

namespace {

// One-way first-order matching of a clause head (quantified variables as
// loose bvars) against a closed term.
bool match(const HTerm& pat, const HTerm& t, std::size_t n, std::vector<HTerm>& subst) {
  if (pat.is(TermKind::bvar)) {
    std::size_t q = n - 1 - pat.index();
    if (subst[q]) return hohh::alpha_equal(subst[q], t);
    subst[q] = t;
    return true;
  }
  if (pat.is(TermKind::constant))
    return t.is(TermKind::constant) && t.name() == pat.name();
  if (pat.is(TermKind::app)) {
    if (!t.is(TermKind::app) || t.args().size() != pat.args().size()) return false;
    if (!match(pat.head(), t.head(), n, subst)) return false;
    for (std::size_t i = 0; i < pat.args().size(); ++i)
      if (!match(pat.args()[i], t.args()[i], n, subst)) return false;
    return true;
  }
  return false;
}

struct Unsupported {};

bool derivable(const hohh::Program& p, const HTerm& atom, std::uint32_t depth,
               std::uint32_t max_depth) {
  if (depth >= max_depth) return false;
  for (const auto& c : p.clauses) {
    const std::size_t n = c.quants.size();
    std::vector<HTerm> subst(n);
    if (!match(c.head, atom, n, subst)) continue;
    for (const auto& s : subst)
      if (!s) throw Unsupported{};
    bool all = true;
    for (const auto& prem : c.premises) {
      if (prem.goal.is(hohh::FormulaKind::top)) continue;
      if (!prem.goal.is(hohh::FormulaKind::atom)) throw Unsupported{};
      std::vector<HTerm> vals;
      for (std::size_t j = 0; j < prem.scope; ++j) vals.push_back(subst[prem.scope - 1 - j]);
      HTerm goal = hohh::instantiate_bvars(prem.goal.atom(), vals);
      if (!derivable(p, goal, depth + 1, max_depth)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

std::optional<bool> brute_derivable(const hohh::Program& program, const HTerm& atom,
                                    std::uint32_t max_depth) {
  try {
    return derivable(program, atom, 0, max_depth);
  } catch (const Unsupported&) {
    return std::nullopt;
  }
}

Decision decide(const hohh::Program& program, const hohh::Formula& goal,
                std::uint64_t budget, std::uint32_t max_depth) {
  Decision d;
  for (std::uint32_t depth = 1; depth <= max_depth; ++depth) {
    if (d.steps >= budget) return d;
    engine::SolveOptions opts;
    opts.max_depth = depth;
    opts.max_steps = budget - d.steps;
    engine::Solver s(program, goal, opts);
    bool residual = false;
    for (;;) {
      engine::SolveEvent ev = s.next();
      if (ev.kind == engine::SolveEvent::Kind::answer) {
        d.steps += ev.stats.backchain_steps;
        d.verdict = Verdict::yes;
        d.answer = std::move(ev.answer);
        return d;
      }
      if (ev.kind == engine::SolveEvent::Kind::residual) {
        residual = true;
        continue;
      }
      d.steps += ev.stats.backchain_steps;
      if (ev.kind == engine::SolveEvent::Kind::budget_exhausted) return d;
      if (ev.stats.depth_cutoffs == 0) {
        if (!residual) d.verdict = Verdict::no;
        return d;
      }
      break;
    }
  }
  return d;
}

}  // namespace lf2hh::testing
