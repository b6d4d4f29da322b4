#include "cohere/event.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "truth_table.hpp"

namespace cohere {

TooManyAtoms::TooManyAtoms(std::size_t count)
    : std::length_error("truth-table enumeration over " + std::to_string(count) +
                        " atoms exceeds the cap of " + std::to_string(kMaxAtoms)) {}

namespace {

bool valid_identifier(const std::string& name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

void collect_atoms(const Event& e, std::set<std::string>& out) {
  switch (e.kind()) {
    case Event::Kind::Atom:
      out.insert(e.name());
      break;
    case Event::Kind::Not:
      collect_atoms(e.lhs(), out);
      break;
    case Event::Kind::And:
    case Event::Kind::Or:
      collect_atoms(e.lhs(), out);
      collect_atoms(e.rhs(), out);
      break;
    default:
      break;
  }
}

// Binding strength for printing: Or < And < Not/leaf.
int precedence(Event::Kind k) {
  switch (k) {
    case Event::Kind::Or:
      return 1;
    case Event::Kind::And:
      return 2;
    default:
      return 3;
  }
}

void print(const Event& e, std::ostream& os) {
  auto operand = [&os](const Event& child, int parent) {
    bool wrap = precedence(child.kind()) < parent;
    if (wrap) os << '(';
    print(child, os);
    if (wrap) os << ')';
  };
  switch (e.kind()) {
    case Event::Kind::Top:
      os << "TOP";
      break;
    case Event::Kind::Bottom:
      os << "BOT";
      break;
    case Event::Kind::Atom:
      os << e.name();
      break;
    case Event::Kind::Not:
      os << '!';
      operand(e.lhs(), 3);
      break;
    case Event::Kind::And:
      operand(e.lhs(), 2);
      os << " & ";
      operand(e.rhs(), 3);
      break;
    case Event::Kind::Or:
      operand(e.lhs(), 1);
      os << " | ";
      operand(e.rhs(), 2);
      break;
  }
}

}  // namespace

Event Event::make(Kind kind, const Event* lhs, const Event* rhs) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  if (lhs) node->lhs = lhs->node_;
  if (rhs) node->rhs = rhs->node_;
  return Event(std::move(node));
}

Event Event::top() { return make(Kind::Top, nullptr, nullptr); }
Event Event::bottom() { return make(Kind::Bottom, nullptr, nullptr); }

Event Event::atom(std::string name) {
  if (!valid_identifier(name) || name == "TOP" || name == "BOT") {
    throw std::invalid_argument("invalid atom name '" + name + "'");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->name = std::move(name);
  return Event(std::move(node));
}

Event Event::lhs() const {
  if (!node_->lhs) throw std::logic_error("event has no left operand");
  return Event(node_->lhs);
}

Event Event::rhs() const {
  if (!node_->rhs) throw std::logic_error("event has no right operand");
  return Event(node_->rhs);
}

std::vector<std::string> Event::atoms() const {
  std::set<std::string> names;
  collect_atoms(*this, names);
  return {names.begin(), names.end()};
}

std::string Event::to_string() const {
  std::ostringstream os;
  print(*this, os);
  return os.str();
}

Event operator!(const Event& e) { return Event::make(Event::Kind::Not, &e, nullptr); }
Event operator&(const Event& a, const Event& b) { return Event::make(Event::Kind::And, &a, &b); }
Event operator|(const Event& a, const Event& b) { return Event::make(Event::Kind::Or, &a, &b); }

bool World::value(const std::string& atom) const {
  auto it = assignment_.find(atom);
  if (it == assignment_.end()) throw std::out_of_range("atom '" + atom + "' is not assigned");
  return it->second;
}

std::string World::to_string() const {
  std::string out;
  for (const auto& [name, value] : assignment_) {
    if (!out.empty()) out += ' ';
    if (!value) out += '!';
    out += name;
  }
  return out;
}

bool eval_event(const Event& e, const World& w) {
  switch (e.kind()) {
    case Event::Kind::Top:
      return true;
    case Event::Kind::Bottom:
      return false;
    case Event::Kind::Atom:
      return w.value(e.name());
    case Event::Kind::Not:
      return !eval_event(e.lhs(), w);
    case Event::Kind::And:
      return eval_event(e.lhs(), w) && eval_event(e.rhs(), w);
    case Event::Kind::Or:
      return eval_event(e.lhs(), w) || eval_event(e.rhs(), w);
  }
  return false;
}

std::vector<std::string> atoms_of(std::span<const Event> events) {
  std::set<std::string> names;
  for (const auto& e : events) collect_atoms(e, names);
  if (names.size() > kMaxAtoms) throw TooManyAtoms(names.size());
  return {names.begin(), names.end()};
}

namespace detail {

TruthTable::TruthTable(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.size() > kMaxAtoms) throw TooManyAtoms(atoms_.size());
  const std::size_t n = atoms_.size();
  const std::size_t worlds = num_worlds();
  columns_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Table column(worlds);
    const std::size_t shift = n - 1 - i;
    for (std::size_t w = 0; w < worlds; ++w) {
      if ((w >> shift) & 1U) column.set(w);
    }
    columns_.push_back(std::move(column));
  }
}

TruthTable TruthTable::over(std::span<const Event> events) {
  return TruthTable(atoms_of(events));
}

TruthTable TruthTable::over(std::span<const ConditionalEvent> family) {
  std::vector<Event> events;
  events.reserve(family.size() * 2);
  for (const auto& c : family) {
    events.push_back(c.consequent());
    events.push_back(c.antecedent());
  }
  return over(events);
}

Table TruthTable::eval(const Event& e) const {
  switch (e.kind()) {
    case Event::Kind::Top:
      return Table(num_worlds()).set();
    case Event::Kind::Bottom:
      return Table(num_worlds());
    case Event::Kind::Atom: {
      auto it = std::lower_bound(atoms_.begin(), atoms_.end(), e.name());
      if (it == atoms_.end() || *it != e.name()) {
        throw std::out_of_range("atom '" + e.name() + "' is not assigned");
      }
      return columns_[static_cast<std::size_t>(it - atoms_.begin())];
    }
    case Event::Kind::Not:
      return ~eval(e.lhs());
    case Event::Kind::And:
      return eval(e.lhs()) & eval(e.rhs());
    case Event::Kind::Or:
      return eval(e.lhs()) | eval(e.rhs());
  }
  return Table(num_worlds());
}

World TruthTable::world(std::size_t index) const {
  std::map<std::string, bool> assignment;
  const std::size_t n = atoms_.size();
  for (std::size_t i = 0; i < n; ++i) {
    assignment.emplace(atoms_[i], ((index >> (n - 1 - i)) & 1U) != 0);
  }
  return World(std::move(assignment));
}

}  // namespace detail

bool is_contradiction(const Event& e) {
  const Event events[] = {e};
  return detail::TruthTable::over(events).eval(e).none();
}

bool implies(const Event& premise, const Event& conclusion) {
  const Event events[] = {premise, conclusion};
  auto table = detail::TruthTable::over(events);
  return table.eval(premise).is_subset_of(table.eval(conclusion));
}

bool equivalent(const Event& a, const Event& b) {
  const Event events[] = {a, b};
  auto table = detail::TruthTable::over(events);
  return table.eval(a) == table.eval(b);
}

ConditionalEvent::ConditionalEvent(Event consequent, Event antecedent)
    : consequent_(std::move(consequent)), antecedent_(std::move(antecedent)) {
  if (is_contradiction(antecedent_)) {
    throw std::invalid_argument("conditioning event " + antecedent_.to_string() +
                                " is impossible");
  }
}

std::string ConditionalEvent::to_string() const {
  return "[" + consequent_.to_string() + " : " + antecedent_.to_string() + "]";
}

bool conditional_equivalent(const ConditionalEvent& a, const ConditionalEvent& b) {
  const ConditionalEvent family[] = {a, b};
  auto table = detail::TruthTable::over(family);
  auto ha = table.eval(a.antecedent());
  auto hb = table.eval(b.antecedent());
  if (ha != hb) return false;
  return (table.eval(a.consequent()) & ha) == (table.eval(b.consequent()) & hb);
}

std::vector<World> constituents(std::span<const ConditionalEvent> family) {
  if (family.empty()) throw std::invalid_argument("constituents of an empty family");
  auto table = detail::TruthTable::over(family);
  detail::Table h0(table.num_worlds());
  for (const auto& c : family) h0 |= table.eval(c.antecedent());

  std::vector<World> worlds;
  worlds.reserve(h0.count());
  for (auto w = h0.find_first(); w != detail::Table::npos; w = h0.find_next(w)) {
    worlds.push_back(table.world(w));
  }
  return worlds;
}

bool gn_included(const ConditionalEvent& c1, const ConditionalEvent& c2) {
  const ConditionalEvent family[] = {c1, c2};
  auto table = detail::TruthTable::over(family);
  auto h1 = table.eval(c1.antecedent());
  auto h2 = table.eval(c2.antecedent());
  auto e1 = table.eval(c1.consequent());
  auto e2 = table.eval(c2.consequent());
  bool true_part = (e1 & h1).is_subset_of(e2 & h2);
  bool false_part = (~e2 & h2).is_subset_of(~e1 & h1);
  return true_part && false_part;
}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace cohere
