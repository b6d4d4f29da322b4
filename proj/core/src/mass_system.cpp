#include "mass_system.hpp"

#include "truth_table.hpp"

namespace cohere::detail {

MassSystem::MassSystem(std::span<const ConditionalEvent> events) {
  auto table = TruthTable::over(events);
  std::vector<Table> h;
  std::vector<Table> eh;
  Table h0(table.num_worlds());
  for (const auto& c : events) {
    h.push_back(table.eval(c.antecedent()));
    eh.push_back(table.eval(c.consequent()) & h.back());
    h0 |= h.back();
  }
  std::vector<std::size_t> worlds;
  for (auto w = h0.find_first(); w != Table::npos; w = h0.find_next(w)) worlds.push_back(w);
  num_worlds_ = worlds.size();

  for (std::size_t i = 0; i < events.size(); ++i) {
    std::vector<Rational> ant(num_worlds_);
    std::vector<Rational> conj(num_worlds_);
    for (std::size_t r = 0; r < num_worlds_; ++r) {
      if (h[i].test(worlds[r])) ant[r] = 1;
      if (eh[i].test(worlds[r])) conj[r] = 1;
    }
    antecedent_.push_back(std::move(ant));
    conjunction_.push_back(std::move(conj));
  }
}

void MassSystem::add_normalization(lp::LinearProgram& lp) const {
  lp.add_constraint(std::vector<Rational>(num_worlds_, Rational(1)), lp::Relation::Equal, 1);
}

void MassSystem::add_bounds(lp::LinearProgram& lp, std::size_t i, const Rational& lo,
                            const Rational& hi) const {
  auto row_for = [&](const Rational& p) {
    std::vector<Rational> row(num_worlds_);
    for (std::size_t r = 0; r < num_worlds_; ++r) {
      row[r] = conjunction_[i][r] - p * antecedent_[i][r];
    }
    return row;
  };
  if (lo == hi) {
    lp.add_constraint(row_for(lo), lp::Relation::Equal, 0);
    return;
  }
  lp.add_constraint(row_for(lo), lp::Relation::GreaterEqual, 0);
  lp.add_constraint(row_for(hi), lp::Relation::LessEqual, 0);
}

Rational MassSystem::mass(const std::vector<Rational>& row, std::span<const Rational> lambda) {
  Rational total = 0;
  for (std::size_t r = 0; r < row.size(); ++r) {
    if (row[r] != 0) total += row[r] * lambda[r];
  }
  return total;
}

}  // namespace cohere::detail
