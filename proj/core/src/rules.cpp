#include <map>

#include "cohere/kb.hpp"

namespace cohere {

namespace {

Event substitute(const Event& e, const std::map<std::string, Event>& binding) {
  switch (e.kind()) {
    case Event::Kind::Atom: {
      auto it = binding.find(e.name());
      return it == binding.end() ? e : it->second;
    }
    case Event::Kind::Not:
      return !substitute(e.lhs(), binding);
    case Event::Kind::And:
      return substitute(e.lhs(), binding) & substitute(e.rhs(), binding);
    case Event::Kind::Or:
      return substitute(e.lhs(), binding) | substitute(e.rhs(), binding);
    default:
      return e;
  }
}

std::optional<Statement> instantiate(const Statement& s,
                                     const std::map<std::string, Event>& binding) {
  Event antecedent = substitute(s.antecedent(), binding);
  if (is_contradiction(antecedent)) return std::nullopt;
  return Statement(s.kind(), antecedent, substitute(s.consequent(), binding));
}

// Events the metavariables may stand for: every antecedent and sentence
// consequent in sight, and their negations, up to equivalence.
std::vector<Event> candidate_events(const KnowledgeBase& kb, const Statement& conclusion) {
  std::vector<Event> raw;
  auto add = [&raw](const Statement& s) {
    raw.push_back(s.antecedent());
    raw.push_back(s.sentence_consequent());
  };
  for (const auto& s : kb.statements()) add(s);
  add(conclusion);

  std::vector<Event> pool;
  auto insert = [&pool](const Event& e) {
    for (const auto& p : pool) {
      if (equivalent(p, e)) return;
    }
    pool.push_back(e);
  };
  for (const auto& e : raw) insert(e);
  for (const auto& e : raw) insert(e.kind() == Event::Kind::Not ? e.lhs() : !e);
  return pool;
}

}  // namespace

const std::vector<InferenceRule>& builtin_rules() {
  static const std::vector<InferenceRule> rules = [] {
    const Event a = Event::atom("A");
    const Event b = Event::atom("B");
    const Event c = Event::atom("C");
    using S = Statement;
    return std::vector<InferenceRule>{
        {"Barbara with p(A|A or B) > 0",
         {S::default_rule(b, c), S::default_rule(a, b), S::negated_default(a | b, !a)},
         S::default_rule(a, c)},
        {"Darii with p(A|A or B) > 0",
         {S::default_rule(b, c), S::negated_default(a, !b), S::negated_default(a | b, !a)},
         S::negated_default(a, !c)},
        {"Barbara with p(A|B) > 0",
         {S::default_rule(b, c), S::default_rule(a, b), S::negated_default(b, !a)},
         S::default_rule(a, c)},
        {"Darii with p(A|B) > 0",
         {S::default_rule(b, c), S::negated_default(a, !b), S::negated_default(b, !a)},
         S::negated_default(a, !c)},
        {"Cautious Monotonicity",
         {S::default_rule(a, c), S::default_rule(a, b)},
         S::default_rule(a & b, c)},
        {"Rational Monotonicity",
         {S::default_rule(a, c), S::negated_default(a, !b)},
         S::default_rule(a & b, c)},
    };
  }();
  return rules;
}

std::vector<RuleMatch> match_rules(const KnowledgeBase& kb, const Statement& conclusion) {
  const auto pool = candidate_events(kb, conclusion);
  const auto& statements = kb.statements();
  std::vector<RuleMatch> matches;

  for (const auto& rule : builtin_rules()) {
    bool found = false;
    for (std::size_t ia = 0; ia < pool.size() && !found; ++ia) {
      for (std::size_t ib = 0; ib < pool.size() && !found; ++ib) {
        for (std::size_t ic = 0; ic < pool.size() && !found; ++ic) {
          const std::map<std::string, Event> binding{
              {"A", pool[ia]}, {"B", pool[ib]}, {"C", pool[ic]}};
          auto goal = instantiate(rule.conclusion, binding);
          if (!goal || !semantically_equal(*goal, conclusion)) continue;

          std::vector<std::size_t> used;
          bool all = true;
          for (const auto& premise : rule.premises) {
            auto wanted = instantiate(premise, binding);
            std::size_t hit = statements.size();
            if (wanted) {
              for (std::size_t j = 0; j < statements.size(); ++j) {
                if (semantically_equal(statements[j], *wanted)) {
                  hit = j;
                  break;
                }
              }
            }
            if (hit == statements.size()) {
              all = false;
              break;
            }
            used.push_back(hit);
          }
          if (!all) continue;

          std::sort(used.begin(), used.end());
          used.erase(std::unique(used.begin(), used.end()), used.end());
          matches.push_back({&rule, std::move(used)});
          found = true;
        }
      }
    }
  }
  return matches;
}

}  // namespace cohere
