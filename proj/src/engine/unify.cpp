#include "lf2hh/engine/unify.hpp"

#include <algorithm>

namespace lf2hh::engine {

using hohh::HTerm;
using hohh::SimpleType;
using hohh::TermKind;

HTerm Store::fresh(std::string name, SimpleType type, std::uint32_t level) {
  std::size_t id = cells_.size();
  HTerm t = hohh::hmeta(id, name, type, level);
  cells_.push_back(Cell{std::move(name), std::move(type), level, {}});
  return t;
}

void Store::bind(std::size_t id, HTerm value) {
  cells_[id].value = std::move(value);
  trail_.push_back(id);
}

void Store::undo(const Mark& m) {
  while (trail_.size() > m.trail) {
    std::size_t id = trail_.back();
    trail_.pop_back();
    if (id < cells_.size()) cells_[id].value = HTerm{};
  }
  if (cells_.size() > m.cells) cells_.resize(m.cells);
}

HTerm Store::whnf(const HTerm& t) const {
  HTerm cur = t;
  for (;;) {
    const HTerm& h = hohh::head_of(cur);
    if (!h.is(TermKind::meta) || !bound(h.id())) return cur;
    cur = hohh::happ(value(h.id()), hohh::args_of(cur));
  }
}

HTerm Store::resolve(const HTerm& t) const {
  ResolveMemo memo;
  return resolve(t, memo);
}

HTerm Store::resolve(const HTerm& t, ResolveMemo& memo) const {
  if (t.is(TermKind::meta) && bound(t.id())) {
    if (auto it = memo.find(t.id()); it != memo.end()) return it->second;
    HTerm r = resolve(value(t.id()), memo);
    memo.emplace(t.id(), r);
    return r;
  }
  HTerm w = whnf(t);
  switch (w.kind()) {
    case TermKind::abs: {
      HTerm b = resolve(w.body(), memo);
      if (b.same_node(w.body())) return w;
      return hohh::habs(w.type(), w.hint(), b);
    }
    case TermKind::app: {
      std::vector<HTerm> args;
      args.reserve(w.args().size());
      bool changed = false;
      for (const auto& a : w.args()) {
        args.push_back(resolve(a, memo));
        changed = changed || !args.back().same_node(a);
      }
      if (!changed) return w;
      return hohh::happ_raw(w.head(), std::move(args));
    }
    default:
      return w;
  }
}

HTerm eta_contract(const HTerm& t) {
  if (!t.is(TermKind::abs)) return t;
  HTerm body = eta_contract(t.body());
  if (body.is(TermKind::app)) {
    const auto& args = body.args();
    HTerm last = eta_contract(args.back());
    if (last.is(TermKind::bvar) && last.index() == 0) {
      std::vector<HTerm> rest(args.begin(), args.end() - 1);
      HTerm fn = hohh::happ_raw(body.head(), rest);
      if (!hohh::has_loose_bvar(fn, 0)) return hohh::shift(fn, -1);
    }
  }
  if (body.same_node(t.body())) return t;
  return hohh::habs(t.type(), t.hint(), body);
}

std::uint32_t max_const_level(const HTerm& t) {
  switch (t.kind()) {
    case TermKind::constant:
      return t.level();
    case TermKind::abs:
      return max_const_level(t.body());
    case TermKind::app: {
      std::uint32_t m = max_const_level(t.head());
      for (const auto& a : t.args()) m = std::max(m, max_const_level(a));
      return m;
    }
    default:
      return 0;
  }
}

namespace {

struct Fail {};
struct Stuck {};

// A pattern argument: a local bound variable or a constant introduced after
// the metavariable.
struct Param {
  bool is_bvar;
  std::size_t index;
  std::string name;
  std::uint32_t level;
  SimpleType type;
};

bool same_param(const Param& a, const Param& b) {
  if (a.is_bvar != b.is_bvar) return false;
  return a.is_bvar ? a.index == b.index : a.name == b.name && a.level == b.level;
}

std::optional<std::vector<Param>> pattern_params(const Store& store,
                                                 std::span<const HTerm> args,
                                                 std::uint32_t level) {
  std::vector<Param> out;
  for (const auto& a : args) {
    HTerm c = eta_contract(store.resolve(a));
    Param p;
    if (c.is(TermKind::bvar)) {
      p = Param{true, c.index(), {}, 0, {}};
    } else if (c.is(TermKind::constant) && c.level() > level) {
      p = Param{false, 0, c.name(), c.level(), c.type()};
    } else {
      return std::nullopt;
    }
    for (const auto& q : out)
      if (same_param(p, q)) return std::nullopt;
    out.push_back(std::move(p));
  }
  return out;
}

// Builds the body of a solution for `meta` applied to `params`: every
// occurrence of a parameter becomes the matching bound variable of the
// abstraction, and other metavariables are pruned or lowered so that the
// result only mentions what the solution may see.
class Inverter {
 public:
  Inverter(Store& store, std::size_t meta, std::uint32_t level,
           const std::vector<Param>& params)
      : store_(store), meta_(meta), level_(level), params_(params) {}

  HTerm run(const HTerm& t, std::size_t depth) {
    HTerm w = store_.whnf(t);
    if (w.is(TermKind::abs))
      return hohh::habs(w.type(), w.hint(), run(w.body(), depth + 1));
    const HTerm& h = hohh::head_of(w);
    std::span<const HTerm> args = hohh::args_of(w);
    HTerm head;
    switch (h.kind()) {
      case TermKind::bvar:
        head = map_bvar(h.index(), depth);
        if (!head) throw Fail{};
        break;
      case TermKind::constant:
        head = map_const(h, depth);
        if (!head) throw Fail{};
        break;
      case TermKind::meta:
        if (h.id() == meta_) throw Fail{};
        return flex(h, args, depth);
      default:
        throw Fail{};
    }
    std::vector<HTerm> out;
    out.reserve(args.size());
    for (const auto& a : args) out.push_back(run(a, depth));
    return hohh::happ_raw(head, std::move(out));
  }

 private:
  HTerm param_var(std::size_t p, std::size_t depth) const {
    return hohh::hbvar(depth + (params_.size() - 1 - p));
  }

  HTerm map_bvar(std::size_t index, std::size_t depth) const {
    if (index < depth) return hohh::hbvar(index);
    for (std::size_t p = 0; p < params_.size(); ++p)
      if (params_[p].is_bvar && params_[p].index == index - depth) return param_var(p, depth);
    return {};
  }

  HTerm map_const(const HTerm& c, std::size_t depth) const {
    if (c.level() <= level_) return c;
    for (std::size_t p = 0; p < params_.size(); ++p)
      if (!params_[p].is_bvar && params_[p].name == c.name() && params_[p].level == c.level())
        return param_var(p, depth);
    return {};
  }

  HTerm flex(const HTerm& y, std::span<const HTerm> args, std::size_t depth) {
    const std::size_t id = y.id();
    const std::uint32_t level_y = store_.level(id);
    const std::vector<SimpleType> arg_types = hohh::arg_types(store_.type(id));

    // Classify arguments: atomic ones can be kept or pruned, anything else
    // forces a direct inversion.
    std::vector<HTerm> atoms;
    bool complex = false;
    for (const auto& a : args) {
      HTerm c = eta_contract(store_.resolve(a));
      if (!c.is(TermKind::bvar) && !c.is(TermKind::constant)) complex = true;
      atoms.push_back(c);
    }

    if (complex) {
      if (level_y > level_) throw Stuck{};
      std::vector<HTerm> out;
      try {
        for (const auto& a : args) out.push_back(run(a, depth));
      } catch (const Fail&) {
        throw Stuck{};
      }
      return hohh::happ_raw(y, std::move(out));
    }

    std::vector<std::size_t> keep;
    std::vector<HTerm> mapped;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      const HTerm& c = atoms[i];
      HTerm m = c.is(TermKind::bvar) ? map_bvar(c.index(), depth) : map_const(c, depth);
      if (m) {
        keep.push_back(i);
        mapped.push_back(m);
      }
    }

    // Constants the solution can only reach through its parameters, but
    // which `y` could mention directly.
    std::vector<std::size_t> extra;
    for (std::size_t p = 0; p < params_.size(); ++p) {
      const Param& q = params_[p];
      if (q.is_bvar || q.level > level_y) continue;
      bool present = false;
      for (std::size_t i : keep)
        if (atoms[i].is(TermKind::constant) && atoms[i].name() == q.name) present = true;
      if (!present) extra.push_back(p);
    }

    if (keep.size() == atoms.size() && extra.empty() && level_y <= level_)
      return hohh::happ_raw(y, std::move(mapped));

    std::vector<SimpleType> new_args;
    for (std::size_t i : keep) new_args.push_back(arg_types[i]);
    for (std::size_t p : extra) new_args.push_back(params_[p].type);
    SimpleType result_type = store_.type(id);
    for (std::size_t i = 0; i < atoms.size(); ++i) result_type = result_type.codomain();
    HTerm fresh = store_.fresh(store_.name(id), hohh::arrows(new_args, result_type),
                               std::min(level_y, level_));

    // y := z1..zm\ fresh z_keep... c_extra...
    const std::size_t m = atoms.size();
    std::vector<HTerm> inner;
    for (std::size_t i : keep) inner.push_back(hohh::hbvar(m - 1 - i));
    for (std::size_t p : extra)
      inner.push_back(hohh::hconst(params_[p].name, params_[p].type, params_[p].level));
    HTerm binding = hohh::happ_raw(fresh, inner);
    for (std::size_t i = m; i-- > 0;) binding = hohh::habs(arg_types[i], "z", binding);
    store_.bind(id, binding);

    for (std::size_t p : extra) mapped.push_back(param_var(p, depth));
    return hohh::happ_raw(fresh, std::move(mapped));
  }

  Store& store_;
  std::size_t meta_;
  std::uint32_t level_;
  const std::vector<Param>& params_;
};

HTerm abstract_params(const Store& store, std::size_t meta, std::size_t n, HTerm body) {
  std::vector<SimpleType> types = hohh::arg_types(store.type(meta));
  for (std::size_t i = n; i-- > 0;) body = hohh::habs(types[i], "x", body);
  return body;
}

}  // namespace

UnifyResult Unifier::unify(const HTerm& a, const HTerm& b) {
  if (pair(a, b) == Outcome::fail) return UnifyResult::fail;
  return retry_delayed();
}

UnifyResult Unifier::retry_delayed() {
  while (!delayed_.empty()) {
    const std::size_t before = store_.trail_size();
    std::vector<DelayedPair> pending = std::move(delayed_);
    delayed_.clear();
    for (const auto& p : pending)
      if (pair(p.lhs, p.rhs) == Outcome::fail) return UnifyResult::fail;
    if (store_.trail_size() == before) break;
  }
  return UnifyResult::ok;
}

Unifier::Outcome Unifier::pair(const HTerm& a0, const HTerm& b0) {
  ++calls_;
  HTerm a = store_.whnf(a0);
  HTerm b = store_.whnf(b0);
  const bool abs_a = a.is(TermKind::abs);
  const bool abs_b = b.is(TermKind::abs);
  if (abs_a && abs_b) return pair(a.body(), b.body());
  if (abs_a) return pair(a.body(), hohh::happ(hohh::shift(b, 1), {hohh::hbvar(0)}));
  if (abs_b) return pair(hohh::happ(hohh::shift(a, 1), {hohh::hbvar(0)}), b.body());

  const HTerm& ha = hohh::head_of(a);
  const HTerm& hb = hohh::head_of(b);
  const bool flex_a = ha.is(TermKind::meta);
  const bool flex_b = hb.is(TermKind::meta);
  if (flex_a && flex_b) return flex_flex(a, b);
  if (flex_a) return flex_rigid(a, b);
  if (flex_b) return flex_rigid(b, a);

  if (ha.kind() != hb.kind()) return Outcome::fail;
  if (ha.is(TermKind::bvar) && ha.index() != hb.index()) return Outcome::fail;
  if (ha.is(TermKind::constant) && (ha.name() != hb.name() || ha.level() != hb.level()))
    return Outcome::fail;
  auto xs = hohh::args_of(a);
  auto ys = hohh::args_of(b);
  if (xs.size() != ys.size()) return Outcome::fail;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (pair(xs[i], ys[i]) == Outcome::fail) return Outcome::fail;
  return Outcome::ok;
}

namespace {

// Binds the head of `flex` (a pattern) so that it equals `other`.
enum class Solve { ok, fail, stuck };

Solve solve_pattern(Store& store, const HTerm& flex, const std::vector<Param>& params,
                    const HTerm& other) {
  const HTerm& x = hohh::head_of(flex);
  Store::Mark mark = store.mark();
  try {
    Inverter inv(store, x.id(), store.level(x.id()), params);
    HTerm body = inv.run(other, 0);
    store.bind(x.id(), abstract_params(store, x.id(), params.size(), body));
    return Solve::ok;
  } catch (const Fail&) {
    store.undo(mark);
    return Solve::fail;
  } catch (const Stuck&) {
    store.undo(mark);
    return Solve::stuck;
  }
}

}  // namespace

Unifier::Outcome Unifier::flex_rigid(const HTerm& flex, const HTerm& other) {
  const HTerm& x = hohh::head_of(flex);
  auto params = pattern_params(store_, hohh::args_of(flex), store_.level(x.id()));
  if (!params) {
    delayed_.push_back(DelayedPair{flex, other});
    return Outcome::ok;
  }
  switch (solve_pattern(store_, flex, *params, other)) {
    case Solve::ok:
      return Outcome::ok;
    case Solve::fail:
      return Outcome::fail;
    case Solve::stuck:
      delayed_.push_back(DelayedPair{flex, other});
      return Outcome::ok;
  }
  return Outcome::fail;
}

Unifier::Outcome Unifier::flex_flex(const HTerm& a, const HTerm& b) {
  const HTerm& x = hohh::head_of(a);
  const HTerm& y = hohh::head_of(b);
  auto pa = pattern_params(store_, hohh::args_of(a), store_.level(x.id()));
  auto pb = pattern_params(store_, hohh::args_of(b), store_.level(y.id()));

  if (x.id() == y.id()) {
    if (!pa || !pb || pa->size() != pb->size()) {
      delayed_.push_back(DelayedPair{a, b});
      return Outcome::ok;
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < pa->size(); ++i)
      if (same_param((*pa)[i], (*pb)[i])) keep.push_back(i);
    if (keep.size() == pa->size()) return Outcome::ok;
    const std::size_t n = pa->size();
    std::vector<SimpleType> types = hohh::arg_types(store_.type(x.id()));
    std::vector<SimpleType> kept_types;
    for (std::size_t i : keep) kept_types.push_back(types[i]);
    SimpleType result = store_.type(x.id());
    for (std::size_t i = 0; i < n; ++i) result = result.codomain();
    HTerm fresh = store_.fresh(store_.name(x.id()), hohh::arrows(kept_types, result),
                               store_.level(x.id()));
    std::vector<HTerm> inner;
    for (std::size_t i : keep) inner.push_back(hohh::hbvar(n - 1 - i));
    store_.bind(x.id(), abstract_params(store_, x.id(), n, hohh::happ_raw(fresh, inner)));
    return Outcome::ok;
  }

  if (pa) {
    Solve s = solve_pattern(store_, a, *pa, b);
    if (s == Solve::ok) return Outcome::ok;
    if (s == Solve::fail) return Outcome::fail;
  }
  if (pb) {
    Solve s = solve_pattern(store_, b, *pb, a);
    if (s == Solve::ok) return Outcome::ok;
    if (s == Solve::fail) return Outcome::fail;
  }
  delayed_.push_back(DelayedPair{a, b});
  return Outcome::ok;
}

}  // namespace lf2hh::engine
