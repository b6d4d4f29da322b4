#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohere/coherence.hpp"
#include "cohere/event.hpp"
#include "cohere/interval.hpp"

namespace cohere {

/// Sentence types and the assessment each puts on the conditional E|H:
///   Default               H ~> E      {1}
///   NegConsequentDefault  H ~> !E     {0}
///   NegatedDefault        H !~> E     [0,1[
///   NegatedNegDefault     H !~> !E    ]0,1]
enum class StatementKind { Default, NegConsequentDefault, NegatedDefault, NegatedNegDefault };

class Statement {
 public:
  /// `consequent` is the E of the conditional E|H the statement constrains.
  /// Throws std::invalid_argument when the antecedent is impossible.
  Statement(StatementKind kind, Event antecedent, Event consequent);

  static Statement default_rule(Event antecedent, Event consequent) {
    return {StatementKind::Default, std::move(antecedent), std::move(consequent)};
  }
  static Statement negated_default(Event antecedent, Event consequent) {
    return {StatementKind::NegatedDefault, std::move(antecedent), std::move(consequent)};
  }

  StatementKind kind() const { return kind_; }
  const Event& antecedent() const { return antecedent_; }
  const Event& consequent() const { return consequent_; }

  ConditionalEvent conditional() const { return {consequent_, antecedent_}; }
  Interval interval() const;

  /// True for the two default kinds, false for negated defaults.
  bool is_default() const;
  /// Consequent as it appears in the sentence (E, or !E for the two
  /// negated-consequent kinds).
  Event sentence_consequent() const;
  /// The same sentence expressed as a Default or NegatedDefault.
  Statement canonical() const;

  /// `H ~> E` or `H !~> E`, in sentence form.
  std::string to_string() const;

 private:
  StatementKind kind_;
  Event antecedent_;
  Event consequent_;
};

/// Same sentence polarity and equivalent conditional events (after moving
/// negated consequents into the sentence).
bool semantically_equal(const Statement& a, const Statement& b);

class KnowledgeBase {
 public:
  /// Throws std::invalid_argument on an empty sequence.
  explicit KnowledgeBase(std::vector<Statement> statements);

  const std::vector<Statement>& statements() const { return statements_; }
  std::size_t size() const { return statements_.size(); }

 private:
  std::vector<Statement> statements_;
};

struct Assessment {
  Family family;
  Box box;
};

/// The family of conditional events of the statements and the product of
/// their intervals, in statement order.
Assessment kb_to_assessment(const KnowledgeBase& kb);

/// Rewrites H !~> E on E|H ([0,1[) as the same sentence on !E|H (]0,1]) and
/// back. Defaults are unchanged. An involution.
KnowledgeBase conjugate(const KnowledgeBase& kb);

enum class VerdictStatus { Entailed, NotEntailed, PConsistent, NotPConsistent, Unknown };

const char* to_string(VerdictStatus status);

struct Counterexample {
  /// Coherent point of the knowledge base's box.
  PreciseAssessment point;
  /// Coherent extension to the conclusion's conditional that violates it.
  Rational z;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Unknown;
  /// Name of the inference rule that proved an entailment.
  std::string certificate;
  /// Indices of the statements the rule was matched against.
  std::vector<std::size_t> premises_used;
  std::optional<PreciseAssessment> witness;
  std::optional<Counterexample> counterexample;
  std::size_t candidates_checked = 0;
};

class InconsistentKnowledgeBase : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Verdict p_consistent(const KnowledgeBase& kb, SearchOptions options = {});

struct EntailmentOptions {
  SearchOptions search;
  /// Denominator of the grid on which a matched rule is re-verified.
  unsigned grid = 4;
};

/// Entailed only through a certified rule matched on a sub-sequence of the
/// knowledge base; NotEntailed only with a re-verified counterexample;
/// Unknown otherwise. Throws InconsistentKnowledgeBase when the knowledge
/// base is not p-consistent.
Verdict p_entails(const KnowledgeBase& kb, const Statement& conclusion,
                  EntailmentOptions options = {});

/// Built-in p-entailment patterns over the metavariables A, B, C.
struct InferenceRule {
  std::string name;
  std::vector<Statement> premises;
  Statement conclusion;
};

const std::vector<InferenceRule>& builtin_rules();

struct RuleMatch {
  const InferenceRule* rule = nullptr;
  /// Indices into the knowledge base, ascending.
  std::vector<std::size_t> premises;
};

/// All rules whose premises match statements of `kb` and whose conclusion
/// matches `conclusion` under one substitution of the metavariables by events
/// drawn from the knowledge base and the conclusion. Matching is semantic.
std::vector<RuleMatch> match_rules(const KnowledgeBase& kb, const Statement& conclusion);

}  // namespace cohere
