#include "cohere/program.hpp"

#include <algorithm>
#include <sstream>

#include "lexer.hpp"

namespace cohere {

namespace {

using detail::Tok;
using detail::Token;
using detail::TokenStream;

Rational number(TokenStream& ts) {
  const Token& tok = ts.expect(Tok::Number, "a number");
  Rational value;
  try {
    value = parse_rational(tok.text);
  } catch (const std::invalid_argument& e) {
    ts.fail(tok, e.what());
  }
  if (!in_unit_interval(value)) {
    ts.fail(tok, "value " + tok.text + " is outside [0, 1]");
  }
  return value;
}

Interval value(TokenStream& ts) {
  if (!ts.accept(Tok::LBracket)) return Interval::point(number(ts));
  const Token& at = ts.peek();
  Rational lo = number(ts);
  ts.expect(Tok::Comma, "','");
  Rational hi = number(ts);
  ts.expect(Tok::RBracket, "']'");
  if (lo > hi) ts.fail(at, "empty interval [" + to_string(lo) + ", " + to_string(hi) + "]");
  return Interval::closed(std::move(lo), std::move(hi));
}

Event antecedent(TokenStream& ts) {
  const Token at = ts.peek();
  Event h = detail::parse_event(ts);
  if (is_contradiction(h)) ts.fail(at, "antecedent " + h.to_string() + " is impossible");
  return h;
}

struct Sentence {
  Event antecedent;
  Event consequent;
  bool negated;
};

// H ~> E or, when allowed, H !~> E.
Sentence sentence(TokenStream& ts, bool allow_negated) {
  Event h = antecedent(ts);
  const Token& arrow = ts.peek();
  bool negated = false;
  if (arrow.kind == Tok::NegArrow) {
    if (!allow_negated) ts.fail(arrow, "'!~>' is not allowed here; write negdefault: H ~> E");
    ts.next();
    negated = true;
  } else {
    ts.expect(Tok::Arrow, allow_negated ? "'~>' or '!~>'" : "'~>'");
  }
  Event e = detail::parse_event(ts);
  return {std::move(h), std::move(e), negated};
}

Statement statement(TokenStream& ts, StatementKind kind) {
  auto s = sentence(ts, false);
  return {kind, std::move(s.antecedent), std::move(s.consequent)};
}

Query query(TokenStream& ts, std::size_t line) {
  Query q;
  q.line = line;
  const Token& word = ts.expect(Tok::Ident, "a query kind");
  if (word.text == "pconsistent") {
    q.body = PConsistentQuery{};
  } else if (word.text == "entails" || word.text == "notentails") {
    const bool negative = word.text == "notentails";
    auto s = sentence(ts, !negative);
    auto kind = negative || s.negated ? StatementKind::NegatedDefault : StatementKind::Default;
    q.body = EntailsQuery{Statement(kind, std::move(s.antecedent), std::move(s.consequent))};
  } else if (word.text == "bounds") {
    BoundsQuery b{detail::parse_conditional(ts), {}};
    const Token& from = ts.expect(Tok::Ident, "'from'");
    if (from.text != "from") ts.fail(from, "expected 'from'");
    do {
      ConditionalEvent c = detail::parse_conditional(ts);
      ts.expect(Tok::Equals, "'='");
      b.premises.push_back({std::move(c), value(ts)});
    } while (ts.accept(Tok::Comma));
    q.body = std::move(b);
  } else if (word.text == "extension") {
    q.body = ExtensionQuery{detail::parse_conditional(ts)};
  } else {
    ts.fail(word, "unknown query '" + word.text + "'");
  }
  return q;
}

std::string statement_text(const Statement& s) {
  return std::string(s.is_default() ? "default: " : "negdefault: ") +
         s.antecedent().to_string() + " ~> " + s.sentence_consequent().to_string();
}

}  // namespace

Program parse_program(std::string_view text) {
  Program program;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    TokenStream ts(detail::tokenize(text.substr(start, end - start), line_no));
    start = end + 1;
    if (ts.peek().kind == Tok::End) continue;

    const Token& keyword = ts.expect(Tok::Ident, "'default', 'negdefault' or 'query'");
    ts.expect(Tok::Colon, "':'");
    if (keyword.text == "default") {
      program.statements.push_back(statement(ts, StatementKind::Default));
    } else if (keyword.text == "negdefault") {
      program.statements.push_back(statement(ts, StatementKind::NegatedDefault));
    } else if (keyword.text == "query") {
      program.queries.push_back(query(ts, line_no));
    } else {
      ts.fail(keyword, "unknown keyword '" + keyword.text + "'");
    }
    const Token& rest = ts.peek();
    if (rest.kind != Tok::End) ts.fail(rest, "unexpected " + std::string(detail::describe(rest.kind)));
  }
  if (program.queries.empty()) throw ParseError("program has no queries", std::max<std::size_t>(line_no, 1), 1);
  return program;
}

std::string to_text(const Query& query) {
  struct Render {
    std::string operator()(const PConsistentQuery&) const { return "query: pconsistent"; }
    std::string operator()(const EntailsQuery& q) const {
      const Statement& c = q.conclusion;
      return "query: entails " + c.antecedent().to_string() + (c.is_default() ? " ~> " : " !~> ") +
             c.sentence_consequent().to_string();
    }
    std::string operator()(const BoundsQuery& q) const {
      std::string out = "query: bounds " + q.target.to_string() + " from ";
      for (std::size_t i = 0; i < q.premises.size(); ++i) {
        const auto& p = q.premises[i];
        if (i > 0) out += ", ";
        out += p.conditional.to_string() + "=";
        out += p.value.is_point() ? to_string(p.value.lo())
                                  : "[" + to_string(p.value.lo()) + ", " + to_string(p.value.hi()) + "]";
      }
      return out;
    }
    std::string operator()(const ExtensionQuery& q) const {
      return "query: extension " + q.target.to_string();
    }
  };
  return std::visit(Render{}, query.body);
}

std::string to_text(const Program& program) {
  std::ostringstream out;
  for (const auto& s : program.statements) out << statement_text(s) << '\n';
  for (const auto& q : program.queries) out << to_text(q) << '\n';
  return out.str();
}

bool Report::ok() const {
  for (const auto& r : results) {
    if (r.error) return false;
  }
  return true;
}

Report run_program(const Program& program, const RunOptions& options) {
  Report report;
  report.options = options;
  const SearchOptions search{options.budget, options.seed};

  for (const auto& query : program.queries) {
    QueryResult result;
    result.query = &query;
    try {
      if (std::holds_alternative<PConsistentQuery>(query.body)) {
        result.verdict = p_consistent(KnowledgeBase(program.statements), search);
      } else if (const auto* q = std::get_if<EntailsQuery>(&query.body)) {
        result.verdict = p_entails(KnowledgeBase(program.statements), q->conclusion,
                                   EntailmentOptions{search, options.grid});
      } else if (const auto* q = std::get_if<BoundsQuery>(&query.body)) {
        Family family;
        Box box;
        for (const auto& p : q->premises) {
          family.push_back(p.conditional);
          box.push_back(p.value);
        }
        result.bounds = propagate(family, box, q->target);
      } else if (const auto* q = std::get_if<ExtensionQuery>(&query.body)) {
        auto assessment = kb_to_assessment(KnowledgeBase(program.statements));
        result.extension = extension_set(assessment.box, assessment.family, q->target, search);
      }
    } catch (const std::exception& e) {
      result.verdict.reset();
      result.bounds.reset();
      result.extension.reset();
      result.error = e.what();
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

}  // namespace cohere
