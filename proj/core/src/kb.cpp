#include "cohere/kb.hpp"

#include "cohere/propagation.hpp"
#include "cohere/sampling.hpp"

namespace cohere {

namespace {

// !X for X, and X for !X, so that double conjugation is the identity.
Event negate(const Event& e) { return e.kind() == Event::Kind::Not ? e.lhs() : !e; }

void require_possible(const Event& antecedent) {
  if (is_contradiction(antecedent)) {
    throw std::invalid_argument("antecedent " + antecedent.to_string() + " is impossible");
  }
}

}  // namespace

Statement::Statement(StatementKind kind, Event antecedent, Event consequent)
    : kind_(kind), antecedent_(std::move(antecedent)), consequent_(std::move(consequent)) {
  require_possible(antecedent_);
}

Interval Statement::interval() const {
  switch (kind_) {
    case StatementKind::Default:
      return Interval::point(1);
    case StatementKind::NegConsequentDefault:
      return Interval::point(0);
    case StatementKind::NegatedDefault:
      return Interval(0, 1, false, true);
    case StatementKind::NegatedNegDefault:
      return Interval(0, 1, true, false);
  }
  return Interval::unit();
}

bool Statement::is_default() const {
  return kind_ == StatementKind::Default || kind_ == StatementKind::NegConsequentDefault;
}

Event Statement::sentence_consequent() const {
  if (kind_ == StatementKind::NegConsequentDefault || kind_ == StatementKind::NegatedNegDefault) {
    return negate(consequent_);
  }
  return consequent_;
}

Statement Statement::canonical() const {
  return {is_default() ? StatementKind::Default : StatementKind::NegatedDefault, antecedent_,
          sentence_consequent()};
}

std::string Statement::to_string() const {
  return antecedent_.to_string() + (is_default() ? " ~> " : " !~> ") +
         sentence_consequent().to_string();
}

bool semantically_equal(const Statement& a, const Statement& b) {
  if (a.is_default() != b.is_default()) return false;
  return conditional_equivalent(a.canonical().conditional(), b.canonical().conditional());
}

KnowledgeBase::KnowledgeBase(std::vector<Statement> statements)
    : statements_(std::move(statements)) {
  if (statements_.empty()) throw std::invalid_argument("knowledge base has no statements");
}

Assessment kb_to_assessment(const KnowledgeBase& kb) {
  Assessment out;
  for (const auto& s : kb.statements()) {
    out.family.push_back(s.conditional());
    out.box.push_back(s.interval());
  }
  return out;
}

KnowledgeBase conjugate(const KnowledgeBase& kb) {
  std::vector<Statement> out;
  for (const auto& s : kb.statements()) {
    switch (s.kind()) {
      case StatementKind::NegatedDefault:
        out.emplace_back(StatementKind::NegatedNegDefault, s.antecedent(), negate(s.consequent()));
        break;
      case StatementKind::NegatedNegDefault:
        out.emplace_back(StatementKind::NegatedDefault, s.antecedent(), negate(s.consequent()));
        break;
      default:
        out.push_back(s);
    }
  }
  return KnowledgeBase(std::move(out));
}

const char* to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Entailed: return "ENTAILED";
    case VerdictStatus::NotEntailed: return "NOT_ENTAILED";
    case VerdictStatus::PConsistent: return "P_CONSISTENT";
    case VerdictStatus::NotPConsistent: return "NOT_P_CONSISTENT";
    case VerdictStatus::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

Verdict p_consistent(const KnowledgeBase& kb, SearchOptions options) {
  auto assessment = kb_to_assessment(kb);
  auto g = check_g_coherence_box(assessment.box, assessment.family, options);
  Verdict v;
  v.candidates_checked = g.candidates_checked;
  switch (g.status) {
    case GStatus::GCoherent:
      v.status = VerdictStatus::PConsistent;
      v.witness = std::move(g.witness);
      break;
    case GStatus::NotGCoherent:
      v.status = VerdictStatus::NotPConsistent;
      break;
    case GStatus::Unknown:
      v.status = VerdictStatus::Unknown;
      break;
  }
  return v;
}

namespace {

// Points of the box on the lattice lo + (hi - lo) * k / grid, open ends excluded.
std::vector<PreciseAssessment> grid_points(const Box& box, unsigned grid) {
  std::vector<PreciseAssessment> points{{}};
  for (const auto& iv : box) {
    std::vector<Rational> values;
    if (iv.is_point()) {
      values.push_back(iv.lo());
    } else {
      for (unsigned k = 0; k <= grid; ++k) {
        Rational v = iv.lo() + (iv.hi() - iv.lo()) * Rational(k, grid);
        if (iv.contains(v)) values.push_back(v);
      }
    }
    std::vector<PreciseAssessment> extended;
    for (const auto& p : points) {
      for (const auto& v : values) {
        auto q = p;
        q.push_back(v);
        extended.push_back(std::move(q));
      }
    }
    points = std::move(extended);
  }
  return points;
}

bool violates(const Interval& extensions, bool wants_one) {
  return wants_one ? extensions.lo() < 1 : extensions.hi() == 1;
}

// Re-checks a matched rule on the grid of the matched sub-sequence: every
// coherent grid point must propagate to an interval satisfying the conclusion.
bool certify(const KnowledgeBase& kb, const RuleMatch& match, const ConditionalEvent& target,
             bool wants_one, unsigned grid) {
  std::vector<Statement> sub;
  for (auto i : match.premises) sub.push_back(kb.statements()[i]);
  auto assessment = kb_to_assessment(KnowledgeBase(std::move(sub)));
  std::size_t coherent_points = 0;
  for (const auto& point : grid_points(assessment.box, grid == 0 ? 1 : grid)) {
    if (!check_coherence(point, assessment.family).coherent) continue;
    ++coherent_points;
    auto extensions = propagate_point(assessment.family, point, target).interval;
    if (violates(extensions, wants_one)) return false;
  }
  return coherent_points > 0;
}

}  // namespace

Verdict p_entails(const KnowledgeBase& kb, const Statement& conclusion,
                  EntailmentOptions options) {
  auto consistency = p_consistent(kb, options.search);
  if (consistency.status == VerdictStatus::NotPConsistent) {
    throw InconsistentKnowledgeBase("knowledge base is not p-consistent");
  }
  if (consistency.status == VerdictStatus::Unknown) {
    Verdict v;
    v.candidates_checked = consistency.candidates_checked;
    return v;
  }

  const Statement goal = conclusion.canonical();
  const bool wants_one = goal.is_default();
  const ConditionalEvent target = goal.conditional();

  for (const auto& match : match_rules(kb, goal)) {
    if (certify(kb, match, target, wants_one, options.grid)) {
      Verdict v;
      v.status = VerdictStatus::Entailed;
      v.certificate = match.rule->name;
      v.premises_used = match.premises;
      v.witness = consistency.witness;
      return v;
    }
  }

  auto assessment = kb_to_assessment(kb);
  Verdict v;
  CandidateSequence candidates(assessment.box, options.search.seed, {*consistency.witness});
  while (v.candidates_checked < options.search.budget) {
    auto point = candidates.next();
    if (!point) break;
    ++v.candidates_checked;
    if (!check_coherence(*point, assessment.family).coherent) continue;
    auto extensions = propagate_point(assessment.family, *point, target).interval;
    if (!violates(extensions, wants_one)) continue;

    Rational z = wants_one ? extensions.lo() : Rational(1);
    auto extended_family = assessment.family;
    extended_family.push_back(target);
    auto extended_point = *point;
    extended_point.push_back(z);
    if (!check_coherence(extended_point, extended_family).coherent) continue;

    v.status = VerdictStatus::NotEntailed;
    v.counterexample = Counterexample{std::move(*point), std::move(z)};
    return v;
  }
  return v;
}

}  // namespace cohere
