#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cohere/kb.hpp"
#include "cohere/propagation.hpp"

namespace cohere {

struct PConsistentQuery {};

struct EntailsQuery {
  Statement conclusion;
};

struct BoundsPremise {
  ConditionalEvent conditional;
  Interval value;
};

struct BoundsQuery {
  ConditionalEvent target;
  std::vector<BoundsPremise> premises;
};

/// Extension set of the knowledge base's assessment to `target`.
struct ExtensionQuery {
  ConditionalEvent target;
};

struct Query {
  std::variant<PConsistentQuery, EntailsQuery, BoundsQuery, ExtensionQuery> body;
  std::size_t line = 0;
};

/// Statements in file order and the queries to run against them.
struct Program {
  std::vector<Statement> statements;
  std::vector<Query> queries;
};

/// Line-oriented program text:
///
///   default: H ~> E
///   negdefault: H ~> E
///   query: pconsistent
///   query: entails H ~> E          (default conclusion)
///   query: entails H !~> E         (negated-default conclusion)
///   query: notentails H ~> E       (same as entails H !~> E)
///   query: bounds [E : H] from [E1 : H1]=v, [E2 : H2]=[a, b]
///   query: extension [E : H]
///
/// `#` starts a comment. Numbers are exact: integers, p/q, or decimals.
/// Throws ParseError with the line and column of the offending token; an
/// impossible antecedent, a value outside [0,1] and a program without
/// queries are parse errors.
Program parse_program(std::string_view text);

/// Program text that parses back to a semantically equal program.
std::string to_text(const Program& program);
std::string to_text(const Query& query);

struct RunOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 1000;
  unsigned grid = 4;
  bool trace = false;
};

struct QueryResult {
  const Query* query = nullptr;
  std::optional<Verdict> verdict;
  std::optional<PropagationResult> bounds;
  std::optional<ExtensionSet> extension;
  /// Set when the engine refused the query; the other fields are then empty.
  std::optional<std::string> error;
};

struct Report {
  RunOptions options;
  std::vector<QueryResult> results;

  bool ok() const;
  /// 0 when every query ran, 1 otherwise.
  int exit_code() const { return ok() ? 0 : 1; }
};

/// Runs the queries in order. Engine errors become per-query error entries.
/// The report points into `program`, which must outlive it.
Report run_program(const Program& program, const RunOptions& options = {});

std::string to_text(const Report& report);
/// Deterministic JSON rendering; identical for identical programs and options.
std::string to_json(const Report& report);

/// Library version string.
const char* version();

}  // namespace cohere
