#include "lf2hh/frontend/parser.hpp"

#include <cctype>
#include <unordered_set>
#include <utility>

#include "lf2hh/frontend/lexer.hpp"

namespace lf2hh::frontend {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const lf::Context& ctx)
      : text_(text), toks_(tokenize(text)), ctx_(ctx) {}

  SourceSignature signature(std::string file) {
    SourceSignature sig;
    sig.file = std::move(file);
    std::unordered_set<std::string> seen;
    lf::Context acc;
    while (!at(Tok::eof)) {
      const Token& name = expect(Tok::ident, "a declaration name");
      if (seen.contains(name.text))
        throw SyntaxError("'" + name.text + "' is already declared", name.pos);
      expect(Tok::colon, "':'");
      std::size_t start = offset_of(cur().pos);
      ctx_ptr_ = &acc;
      lf::Expr cls = term();
      std::size_t stop = offset_of(cur().pos);
      const Token& dot = expect(Tok::dot, "'.' to end the declaration");
      std::string src(text_.substr(start, stop - start));
      while (!src.empty() && std::isspace(static_cast<unsigned char>(src.back())))
        src.pop_back();
      sig.declarations.push_back({name.text, cls, src, name.pos, dot.pos});
      acc.add(name.text, cls);
      seen.insert(name.text);
    }
    return sig;
  }

  lf::Expr query() {
    ctx_ptr_ = &ctx_;
    lf::Expr e = term();
    if (at(Tok::dot)) ++i_;
    if (!at(Tok::eof))
      throw SyntaxError(std::string("unexpected ") + describe(cur().kind) +
                            " after the query",
                        cur().pos);
    return e;
  }

 private:
  const Token& cur() const { return toks_[i_]; }
  bool at(Tok t) const { return cur().kind == t; }
  const Token& expect(Tok t, const std::string& what) {
    if (!at(t))
      throw SyntaxError("expected " + what + ", found " + found(), cur().pos);
    return toks_[i_++];
  }
  std::string found() const {
    if (at(Tok::ident)) return "'" + cur().text + "'";
    return describe(cur().kind);
  }

  std::size_t offset_of(SourcePos p) const {
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < text_.size() && line < p.line) {
      if (text_[i] == '\n') ++line;
      ++i;
    }
    return std::min(text_.size(), i + p.column - 1);
  }

  bool starts_atom() const {
    return at(Tok::ident) || at(Tok::kw_type) || at(Tok::lparen);
  }

  lf::Expr term() {
    if (at(Tok::lbrace) || at(Tok::lbracket)) return binder();
    lf::Expr lhs = application();
    if (at(Tok::arrow)) {
      ++i_;
      return lf::arrow(lhs, term());
    }
    if (at(Tok::backarrow)) {
      while (at(Tok::backarrow)) {
        ++i_;
        lf::Expr premise =
            (at(Tok::lbrace) || at(Tok::lbracket)) ? binder() : application();
        lhs = lf::arrow(premise, lhs);
      }
      if (at(Tok::arrow))
        throw SyntaxError("mixing '->' and '<-' needs parentheses", cur().pos);
    }
    return lhs;
  }

  lf::Expr binder() {
    const bool is_pi = at(Tok::lbrace);
    const Tok close = is_pi ? Tok::rbrace : Tok::rbracket;
    ++i_;
    const Token& name = expect(Tok::ident, "a bound variable name");
    if (!at(Tok::colon))
      throw SyntaxError("binder '" + name.text +
                            "' needs a type annotation; type reconstruction is not "
                            "supported",
                        name.pos);
    ++i_;
    lf::Expr dom = term();
    expect(close, is_pi ? "'}'" : "']'");
    std::string internal = lf::fresh_name(name.text);
    bound_.emplace_back(name.text, internal);
    lf::Expr body = term();
    bound_.pop_back();
    lf::Expr abs_body = lf::abstract(body, internal);
    return is_pi ? lf::pi(name.text, dom, abs_body) : lf::lam(name.text, dom, abs_body);
  }

  lf::Expr application() {
    lf::Expr head = atom();
    for (;;) {
      if (starts_atom()) {
        head = lf::app(head, atom());
      } else if (at(Tok::lbrace) || at(Tok::lbracket)) {
        // A trailing binder extends as far right as possible.
        head = lf::app(head, binder());
      } else {
        return head;
      }
    }
  }

  lf::Expr atom() {
    if (at(Tok::kw_type)) {
      ++i_;
      return lf::type();
    }
    if (at(Tok::lparen)) {
      ++i_;
      lf::Expr e = term();
      expect(Tok::rparen, "')'");
      return e;
    }
    const Token& id = expect(Tok::ident, "an expression");
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
      if (it->first == id.text) return lf::var(it->second);
    if (ctx_ptr_->contains(id.text)) return lf::var(id.text);
    if (std::isupper(static_cast<unsigned char>(id.text[0])))
      throw SyntaxError("free variable '" + id.text +
                            "': implicit arguments are not supported, bind it "
                            "explicitly with {" +
                            id.text + ":...}",
                        id.pos);
    throw SyntaxError("unbound constant '" + id.text + "'", id.pos);
  }

  std::string_view text_;
  std::vector<Token> toks_;
  std::size_t i_ = 0;
  const lf::Context& ctx_;
  const lf::Context* ctx_ptr_ = nullptr;
  std::vector<std::pair<std::string, std::string>> bound_;
};

}  // namespace

SourceSignature parse_source(std::string_view text, std::string file) {
  lf::Context empty;
  return Parser(text, empty).signature(std::move(file));
}

lf::Context to_context(const SourceSignature& sig) {
  lf::Context ctx;
  for (const auto& d : sig.declarations) ctx.add(d.name, d.classifier);
  return ctx;
}

lf::Context parse_signature(std::string_view text) {
  return to_context(parse_source(text));
}

lf::Expr parse_query(std::string_view text, const lf::Context& ctx) {
  return Parser(text, ctx).query();
}

}  // namespace lf2hh::frontend
