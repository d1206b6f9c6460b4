#include "lf2hh/frontend/lexer.hpp"

#include <cctype>

namespace lf2hh::frontend {

const char* describe(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::kw_type: return "'type'";
    case Tok::colon: return "':'";
    case Tok::dot: return "'.'";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::lbracket: return "'['";
    case Tok::rbracket: return "']'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::arrow: return "'->'";
    case Tok::backarrow: return "'<-'";
    case Tok::eof: return "end of input";
  }
  return "?";
}

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      SourcePos start = pos_;
      if (at_end()) {
        out.push_back({Tok::eof, "", start});
        return out;
      }
      char c = peek();
      if (ident_start(c)) {
        std::string word;
        while (!at_end() && ident_char(peek())) word += advance();
        out.push_back({word == "type" ? Tok::kw_type : Tok::ident, word, start});
        continue;
      }
      if (c == '-' && peek(1) == '>') {
        advance();
        advance();
        out.push_back({Tok::arrow, "->", start});
        continue;
      }
      if (c == '<' && peek(1) == '-') {
        advance();
        advance();
        out.push_back({Tok::backarrow, "<-", start});
        continue;
      }
      Tok kind;
      switch (c) {
        case ':': kind = Tok::colon; break;
        case '.': kind = Tok::dot; break;
        case '{': kind = Tok::lbrace; break;
        case '}': kind = Tok::rbrace; break;
        case '[': kind = Tok::lbracket; break;
        case ']': kind = Tok::rbracket; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        default:
          throw SyntaxError(std::string("unexpected character '") + c + "'", start);
      }
      advance();
      out.push_back({kind, std::string(1, c), start});
    }
  }

 private:
  bool at_end() const { return i_ >= text_.size(); }
  char peek(std::size_t k = 0) const {
    return i_ + k < text_.size() ? text_[i_ + k] : '\0';
  }
  char advance() {
    char c = text_[i_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (!at_end()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        continue;
      }
      if (c != '%') return;
      SourcePos start = pos_;
      char n = peek(1);
      if (n == '{') {
        advance();
        advance();
        while (!(peek() == '}' && peek(1) == '%')) {
          if (at_end()) throw SyntaxError("unterminated block comment", start);
          advance();
        }
        advance();
        advance();
        continue;
      }
      if (n == '%' || n == ' ' || n == '\t' || n == '\n' || n == '\r' || n == '\0') {
        while (!at_end() && peek() != '\n') advance();
        continue;
      }
      std::string word;
      advance();
      while (!at_end() && ident_char(peek())) word += advance();
      throw SyntaxError("directive '%" + word + "' is not supported", start);
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

}  // namespace lf2hh::frontend
