#include "lf2hh/extract/decode.hpp"

#include <string>
#include <vector>

#include "lf2hh/error.hpp"
#include "lf2hh/hohh/print.hpp"
#include "lf2hh/lf/print.hpp"
#include "lf2hh/translate/encode.hpp"

namespace lf2hh::extract {

using hohh::HTerm;
using hohh::TermKind;

namespace {

class Decoder {
 public:
  explicit Decoder(const lf::Context& ctx) : ctx_(ctx) {}

  lf::Expr object(const HTerm& t, const lf::Expr& type) {
    if (type.is(lf::ExprKind::pi)) {
      std::string hint = t.is(TermKind::abs) && !t.hint().empty()
                             ? t.hint()
                             : translate::binder_hint(type.name(), type.domain());
      std::string y = lf::fresh_name(hint);
      HTerm body = t.is(TermKind::abs) ? t.body() : hohh::happ(hohh::shift(t, 1), {hohh::hbvar(0)});
      locals_.push_back(Local{y, type.domain()});
      lf::Expr m = object(body, lf::beta_normalize(lf::open(type.body(), y)));
      locals_.pop_back();
      return lf::lam_over(y, type.domain(), m);
    }
    if (t.is(TermKind::abs))
      throw DecodeError("abstraction " + hohh::to_string(t) + " where base type " +
                        lf::to_string(type) + " is expected");
    const HTerm& h = hohh::head_of(t);
    auto args = hohh::args_of(t);
    lf::Expr head;
    lf::Expr cls;
    switch (h.kind()) {
      case TermKind::constant: {
        const lf::Entry* e = h.level() == 0 ? ctx_.find(h.name()) : nullptr;
        if (!e || e->kind != lf::EntryKind::type_assign)
          throw DecodeError("head constant '" + h.name() + "' is not an object of the signature");
        head = lf::var(h.name());
        cls = e->classifier;
        break;
      }
      case TermKind::bvar: {
        if (h.index() >= locals_.size())
          throw DecodeError("loose bound variable in witness");
        const Local& l = locals_[locals_.size() - 1 - h.index()];
        head = lf::var(l.name);
        cls = l.type;
        break;
      }
      case TermKind::meta:
        throw DecodeError("witness contains the uninstantiated metavariable " + hohh::to_string(h));
      default:
        throw DecodeError("witness is not in normal form");
    }
    if (args.size() != lf::pi_prefix_length(cls))
      throw DecodeError("'" + hohh::to_string(h) + "' has " + std::to_string(args.size()) +
                        " arguments but its type " + lf::to_string(cls) + " expects " +
                        std::to_string(lf::pi_prefix_length(cls)));
    lf::Expr out = head;
    for (const auto& a : args) {
      lf::Expr m = object(a, cls.domain());
      out = lf::app(out, m);
      cls = lf::beta_normalize(lf::instantiate(cls.body(), m));
    }
    return out;
  }

 private:
  struct Local {
    std::string name;
    lf::Expr type;
  };
  const lf::Context& ctx_;
  std::vector<Local> locals_;
};

}  // namespace

lf::Expr decode(const HTerm& t, const lf::Expr& expected, const lf::Context& ctx) {
  Decoder d(ctx);
  return d.object(t, lf::beta_normalize(expected));
}

lf::CheckReport verify_witness(const lf::Context& ctx, const lf::Expr& m, const lf::Expr& a) {
  return lf::check_object(ctx, m, a);
}

}  // namespace lf2hh::extract
