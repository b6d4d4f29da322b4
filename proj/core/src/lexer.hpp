#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cohere/event.hpp"

namespace cohere::detail {

enum class Tok {
  Ident,
  Number,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Colon,
  Comma,
  Equals,
  Bang,
  Amp,
  Pipe,
  Arrow,     // ~>
  NegArrow,  // !~>
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

// Tokenizes one logical line. `#` starts a comment running to end of line.
std::vector<Token> tokenize(std::string_view text, std::size_t line = 1);

const char* describe(Tok kind);

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool accept(Tok kind);
  const Token& expect(Tok kind, std::string_view what);
  bool at_keyword(std::string_view word) const;
  [[noreturn]] void fail(const Token& at, const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// event := disj ; disj := conj ('|' conj)* ; conj := unary ('&' unary)* ;
// unary := '!' unary | '(' event ')' | TOP | BOT | ident
Event parse_event(TokenStream& ts);
// '[' event ':' event ']'
ConditionalEvent parse_conditional(TokenStream& ts);

}  // namespace cohere::detail
