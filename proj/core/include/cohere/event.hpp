#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cohere {

/// Truth-table checks enumerate 2^n worlds; beyond this many atoms they are refused.
inline constexpr std::size_t kMaxAtoms = 20;

class TooManyAtoms : public std::length_error {
 public:
  explicit TooManyAtoms(std::size_t count);
};

/// Immutable propositional formula over named atoms. Copies share structure.
class Event {
 public:
  enum class Kind { Top, Bottom, Atom, Not, And, Or };

  static Event top();
  static Event bottom();
  /// Throws std::invalid_argument unless `name` matches [A-Za-z_][A-Za-z0-9_]*
  /// and is not one of the reserved constants TOP / BOT.
  static Event atom(std::string name);

  Kind kind() const { return node_->kind; }
  /// Atom name; empty for every other kind.
  const std::string& name() const { return node_->name; }
  /// Operand of Not, left operand of And/Or.
  Event lhs() const;
  /// Right operand of And/Or.
  Event rhs() const;

  /// Sorted, de-duplicated atom names occurring in the formula.
  std::vector<std::string> atoms() const;

  /// Text in the input grammar (`!`, `&`, `|`, `TOP`, `BOT`) with minimal parentheses.
  std::string to_string() const;

  friend Event operator!(const Event& e);
  friend Event operator&(const Event& a, const Event& b);
  friend Event operator|(const Event& a, const Event& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };
  explicit Event(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Event make(Kind kind, const Event* lhs, const Event* rhs);

  std::shared_ptr<const Node> node_;
};

/// Total truth assignment over a set of atoms.
class World {
 public:
  World() = default;
  explicit World(std::map<std::string, bool> assignment) : assignment_(std::move(assignment)) {}

  /// Throws std::out_of_range naming the atom when it is not assigned.
  bool value(const std::string& atom) const;
  const std::map<std::string, bool>& assignment() const { return assignment_; }

  /// Compact form such as `A !B C`.
  std::string to_string() const;

  friend bool operator==(const World&, const World&) = default;

 private:
  std::map<std::string, bool> assignment_;
};

bool eval_event(const Event& e, const World& w);

/// Union of atoms of all events, sorted. Throws TooManyAtoms above kMaxAtoms.
std::vector<std::string> atoms_of(std::span<const Event> events);

bool is_contradiction(const Event& e);
bool implies(const Event& premise, const Event& conclusion);
bool equivalent(const Event& a, const Event& b);

/// E|H: true on EH, false on !E H, void when H is false.
class ConditionalEvent {
 public:
  /// Throws std::invalid_argument when `antecedent` is a contradiction.
  ConditionalEvent(Event consequent, Event antecedent);

  const Event& consequent() const { return consequent_; }
  const Event& antecedent() const { return antecedent_; }

  /// `[E : H]`
  std::string to_string() const;

 private:
  Event consequent_;
  Event antecedent_;
};

/// Same three-valued truth table: H equivalent to H' and EH equivalent to E'H'.
bool conditional_equivalent(const ConditionalEvent& a, const ConditionalEvent& b);

/// Worlds over the union of the family's atoms in which the disjunction of
/// all antecedents holds. Ordered lexicographically by atom name with
/// false before true. Throws std::invalid_argument on an empty family.
std::vector<World> constituents(std::span<const ConditionalEvent> family);

/// Goodman-Nguyen inclusion: E1H1 implies E2H2 and !E2H2 implies !E1H1.
bool gn_included(const ConditionalEvent& c1, const ConditionalEvent& c2);

// Textual grammar: atoms, `!`, `&`, `|`, parentheses, TOP, BOT; `[E : H]`.

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Event parse_event(std::string_view text);
ConditionalEvent parse_conditional(std::string_view text);

}  // namespace cohere
