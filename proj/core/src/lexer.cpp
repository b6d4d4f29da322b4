#include "lexer.hpp"

#include <cctype>

namespace cohere::detail {

std::vector<Token> tokenize(std::string_view text, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto col = [&i] { return i + 1; };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = col();
    auto single = [&](Tok kind) {
      out.push_back({kind, std::string(1, c), line, start});
      ++i;
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), line, start});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      auto digits = [&] {
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      };
      digits();
      if (j < text.size() && (text[j] == '.' || text[j] == '/')) {
        ++j;
        digits();
      }
      out.push_back({Tok::Number, std::string(text.substr(i, j - i)), line, start});
      i = j;
    } else if (c == '~' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::Arrow, "~>", line, start});
      i += 2;
    } else if (c == '!' && text.substr(i, 3) == "!~>") {
      out.push_back({Tok::NegArrow, "!~>", line, start});
      i += 3;
    } else {
      switch (c) {
        case '(': single(Tok::LParen); break;
        case ')': single(Tok::RParen); break;
        case '[': single(Tok::LBracket); break;
        case ']': single(Tok::RBracket); break;
        case ':': single(Tok::Colon); break;
        case ',': single(Tok::Comma); break;
        case '=': single(Tok::Equals); break;
        case '!': single(Tok::Bang); break;
        case '&': single(Tok::Amp); break;
        case '|': single(Tok::Pipe); break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", line, start);
      }
    }
  }
  out.push_back({Tok::End, "", line, text.size() + 1});
  return out;
}

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Colon: return "':'";
    case Tok::Comma: return "','";
    case Tok::Equals: return "'='";
    case Tok::Bang: return "'!'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::Arrow: return "'~>'";
    case Tok::NegArrow: return "'!~>'";
    case Tok::End: return "end of line";
  }
  return "token";
}

const Token& TokenStream::peek(std::size_t ahead) const {
  std::size_t at = pos_ + ahead;
  return at < tokens_.size() ? tokens_[at] : tokens_.back();
}

const Token& TokenStream::next() {
  const Token& t = peek();
  if (pos_ < tokens_.size() - 1) ++pos_;
  return t;
}

bool TokenStream::accept(Tok kind) {
  if (peek().kind != kind) return false;
  next();
  return true;
}

const Token& TokenStream::expect(Tok kind, std::string_view what) {
  const Token& t = peek();
  if (t.kind != kind) {
    fail(t, "expected " + std::string(what) + ", found " +
                (t.kind == Tok::End ? std::string("end of line") : "'" + t.text + "'"));
  }
  return next();
}

bool TokenStream::at_keyword(std::string_view word) const {
  return peek().kind == Tok::Ident && peek().text == word;
}

void TokenStream::fail(const Token& at, const std::string& message) const {
  throw ParseError(message, at.line, at.column);
}

namespace {

Event parse_disjunction(TokenStream& ts);

Event parse_unary(TokenStream& ts) {
  const Token& t = ts.peek();
  if (ts.accept(Tok::Bang)) return !parse_unary(ts);
  if (ts.accept(Tok::LParen)) {
    Event inner = parse_disjunction(ts);
    ts.expect(Tok::RParen, "')'");
    return inner;
  }
  if (t.kind == Tok::Ident) {
    Token id = ts.next();
    if (id.text == "TOP") return Event::top();
    if (id.text == "BOT") return Event::bottom();
    return Event::atom(id.text);
  }
  ts.fail(t, "expected an event, found " +
                 (t.kind == Tok::End ? std::string("end of line") : "'" + t.text + "'"));
}

Event parse_conjunction(TokenStream& ts) {
  Event e = parse_unary(ts);
  while (ts.accept(Tok::Amp)) e = e & parse_unary(ts);
  return e;
}

Event parse_disjunction(TokenStream& ts) {
  Event e = parse_conjunction(ts);
  while (ts.accept(Tok::Pipe)) e = e | parse_conjunction(ts);
  return e;
}

}  // namespace

Event parse_event(TokenStream& ts) { return parse_disjunction(ts); }

ConditionalEvent parse_conditional(TokenStream& ts) {
  ts.expect(Tok::LBracket, "'['");
  Event consequent = parse_event(ts);
  ts.expect(Tok::Colon, "':'");
  const Token& at = ts.peek();
  Event antecedent = parse_event(ts);
  ts.expect(Tok::RBracket, "']'");
  if (is_contradiction(antecedent)) {
    ts.fail(at, "conditioning event " + antecedent.to_string() + " is impossible");
  }
  return ConditionalEvent(consequent, antecedent);
}

}  // namespace cohere::detail
