#include "lexer.hpp"

namespace cohere {

namespace {

template <typename Parse>
auto parse_whole(std::string_view text, Parse parse) {
  detail::TokenStream ts(detail::tokenize(text));
  auto value = parse(ts);
  if (ts.peek().kind != detail::Tok::End) {
    ts.fail(ts.peek(), "unexpected trailing '" + ts.peek().text + "'");
  }
  return value;
}

}  // namespace

Event parse_event(std::string_view text) {
  return parse_whole(text, [](detail::TokenStream& ts) { return detail::parse_event(ts); });
}

ConditionalEvent parse_conditional(std::string_view text) {
  return parse_whole(text,
                     [](detail::TokenStream& ts) { return detail::parse_conditional(ts); });
}

}  // namespace cohere
