#pragma once

#include <span>
#include <vector>

#include "cohere/event.hpp"
#include "cohere/lp.hpp"

namespace cohere::detail {

// Unknowns are the masses of the constituents of a family of conditional
// events (worlds inside the disjunction of the antecedents). Row vectors
// are 0/1 indicators over those constituents.
class MassSystem {
 public:
  explicit MassSystem(std::span<const ConditionalEvent> events);

  std::size_t num_worlds() const { return num_worlds_; }
  std::size_t num_events() const { return antecedent_.size(); }
  const std::vector<Rational>& antecedent(std::size_t i) const { return antecedent_[i]; }
  const std::vector<Rational>& conjunction(std::size_t i) const { return conjunction_[i]; }

  // Program over the masses with no constraints yet.
  lp::LinearProgram empty_program() const { return lp::LinearProgram(num_worlds_); }
  // Masses sum to one.
  void add_normalization(lp::LinearProgram& lp) const;
  // lo * mass(H_i) <= mass(E_i H_i) <= hi * mass(H_i); an equality when lo = hi.
  void add_bounds(lp::LinearProgram& lp, std::size_t i, const Rational& lo,
                  const Rational& hi) const;

  static Rational mass(const std::vector<Rational>& row, std::span<const Rational> lambda);

 private:
  std::size_t num_worlds_ = 0;
  std::vector<std::vector<Rational>> antecedent_;
  std::vector<std::vector<Rational>> conjunction_;
};

}  // namespace cohere::detail
