#ifndef LF2HH_FRONTEND_LEXER_HPP
#define LF2HH_FRONTEND_LEXER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lf2hh/error.hpp"

namespace lf2hh::frontend {

enum class Tok : std::uint8_t {
  ident,
  kw_type,
  colon,
  dot,
  lbrace,
  rbrace,
  lbracket,
  rbracket,
  lparen,
  rparen,
  arrow,      // ->
  backarrow,  // <-
  eof
};

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

const char* describe(Tok t);

// Splits `text` into tokens. Comments are `%` followed by a space, a tab, a
// newline or another `%` (to end of line) and `%{ ... }%` blocks. Any other
// `%` starts a directive, which is rejected. Throws SyntaxError.
std::vector<Token> tokenize(std::string_view text);

}  // namespace lf2hh::frontend

#endif  // LF2HH_FRONTEND_LEXER_HPP
