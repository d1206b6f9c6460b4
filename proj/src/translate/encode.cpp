#include "lf2hh/translate/encode.hpp"

#include <cctype>

#include "lf2hh/error.hpp"
#include "lf2hh/lf/print.hpp"

namespace lf2hh::translate {

using hohh::HTerm;
using hohh::SimpleType;

SimpleType phi(const lf::Expr& p) {
  switch (p.kind()) {
    case lf::ExprKind::type:
      return hohh::lf_type();
    case lf::ExprKind::pi:
      return hohh::arrow(phi(p.domain()), phi(p.body()));
    case lf::ExprKind::var:
    case lf::ExprKind::app: {
      lf::Spine s = lf::spine(p);
      if (s.head.is(lf::ExprKind::var)) return hohh::lf_obj();
      break;
    }
    default:
      break;
  }
  throw CanonicityError("not a canonical type or kind: " + lf::to_string(p));
}

HTerm constant_for(const lf::Entry& entry) {
  return hohh::hconst(entry.name, phi(entry.classifier), 0);
}

namespace {

class Encoder {
 public:
  Encoder(const lf::Context& ctx, const std::vector<Binder>& binders)
      : ctx_(ctx), binders_(binders) {}

  HTerm run(const lf::Expr& e) {
    switch (e.kind()) {
      case lf::ExprKind::lam: {
        SimpleType ty = phi(e.domain());
        lams_.push_back(lf::pi_prefix_length(e.domain()));
        HTerm body = run(e.body());
        lams_.pop_back();
        return hohh::habs(ty, binder_hint(e.name(), e.domain()), body);
      }
      case lf::ExprKind::var:
      case lf::ExprKind::bvar:
      case lf::ExprKind::app: {
        lf::Spine s = lf::spine(e);
        std::size_t need = 0;
        HTerm head = head_term(s.head, need);
        if (s.args.size() != need)
          throw CanonicityError("variable occurrence not fully applied in " +
                                lf::to_string(e));
        std::vector<HTerm> args;
        args.reserve(s.args.size());
        for (const auto& a : s.args) args.push_back(run(a));
        return hohh::happ_raw(head, std::move(args));
      }
      default:
        throw CanonicityError("cannot encode " + lf::to_string(e) +
                              " as an object or base type");
    }
  }

 private:
  HTerm head_term(const lf::Expr& h, std::size_t& arity) {
    if (h.is(lf::ExprKind::bvar)) {
      if (h.index() >= lams_.size())
        throw CanonicityError("loose bound variable in encoded expression");
      arity = lams_[lams_.size() - 1 - h.index()];
      return hohh::hbvar(h.index());
    }
    if (!h.is(lf::ExprKind::var))
      throw CanonicityError("expression is not in beta-normal form");
    for (std::size_t i = binders_.size(); i-- > 0;) {
      if (binders_[i].name == h.name()) {
        arity = lf::pi_prefix_length(binders_[i].type);
        return hohh::hbvar(lams_.size() + (binders_.size() - 1 - i));
      }
    }
    const lf::Entry* entry = ctx_.find(h.name());
    if (!entry) throw UnboundVariable(h.name());
    arity = lf::pi_prefix_length(entry->classifier);
    return constant_for(*entry);
  }

  const lf::Context& ctx_;
  const std::vector<Binder>& binders_;
  std::vector<std::size_t> lams_;
};

}  // namespace

HTerm encode(const lf::Expr& e, const lf::Context& ctx, const std::vector<Binder>& binders) {
  Encoder enc(ctx, binders);
  return enc.run(e);
}

std::string binder_hint(const std::string& name, const lf::Expr& domain) {
  std::string root = lf::display_root(name);
  if (root.empty()) {
    lf::Expr cur = domain;
    while (cur.is(lf::ExprKind::pi)) cur = cur.body();
    lf::Spine s = lf::spine(cur);
    if (s.head.is(lf::ExprKind::var) && !s.head.name().empty())
      root = std::string(1, s.head.name()[0]);
    else
      root = "x";
  }
  for (auto& ch : root) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return root;
}

}  // namespace lf2hh::translate
