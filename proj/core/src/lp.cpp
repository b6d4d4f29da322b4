#include "cohere/lp.hpp"

#include <stdexcept>
#include <string>

namespace cohere::lp {

LinearProgram::LinearProgram(std::size_t num_variables)
    : num_variables_(num_variables), free_(num_variables, false) {
  if (num_variables == 0) throw std::invalid_argument("linear program without variables");
}

void LinearProgram::add_constraint(std::vector<Rational> coefficients, Relation relation,
                                   Rational rhs) {
  if (coefficients.size() != num_variables_) {
    throw std::invalid_argument("constraint has " + std::to_string(coefficients.size()) +
                                " coefficients, program has " +
                                std::to_string(num_variables_) + " variables");
  }
  constraints_.push_back({std::move(coefficients), relation, std::move(rhs)});
}

void LinearProgram::set_objective(std::vector<Rational> coefficients, Sense sense) {
  if (!coefficients.empty() && coefficients.size() != num_variables_) {
    throw std::invalid_argument("objective has " + std::to_string(coefficients.size()) +
                                " coefficients, program has " +
                                std::to_string(num_variables_) + " variables");
  }
  objective_ = std::move(coefficients);
  sense_ = sense;
}

void LinearProgram::set_free(std::size_t variable, bool free) { free_.at(variable) = free; }

Rational LinearProgram::evaluate(std::span<const Rational> x) const {
  Rational value = 0;
  for (std::size_t j = 0; j < objective_.size(); ++j) value += objective_[j] * x[j];
  return value;
}

namespace {

thread_local SolveRecorder* active_recorder = nullptr;

// Dense tableau in canonical form with respect to `basis`.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : lp_(lp) {
    const std::size_t n = lp.num_variables();
    for (std::size_t j = 0; j < n; ++j) {
      positive_col_.push_back(structural_++);
      negative_col_.push_back(lp.is_free(j) ? structural_++ : kNone);
    }

    std::size_t slacks = 0;
    std::size_t artificials = 0;
    for (const auto& c : lp.constraints()) {
      bool flip = c.rhs < 0;
      Relation rel = c.relation;
      if (flip && rel != Relation::Equal) {
        rel = rel == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
      }
      if (rel != Relation::Equal) ++slacks;
      if (rel != Relation::LessEqual) ++artificials;
    }
    first_artificial_ = structural_ + slacks;
    cols_ = first_artificial_ + artificials;

    std::size_t next_slack = structural_;
    std::size_t next_artificial = first_artificial_;
    for (const auto& c : lp.constraints()) {
      const bool flip = c.rhs < 0;
      Relation rel = c.relation;
      if (flip && rel != Relation::Equal) {
        rel = rel == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
      }
      std::vector<Rational> row(cols_);
      for (std::size_t j = 0; j < n; ++j) {
        Rational a = flip ? Rational(-c.coefficients[j]) : c.coefficients[j];
        row[positive_col_[j]] = a;
        if (negative_col_[j] != kNone) row[negative_col_[j]] = -a;
      }
      std::size_t basic = kNone;
      if (rel == Relation::LessEqual) {
        row[next_slack] = 1;
        basic = next_slack++;
      } else if (rel == Relation::GreaterEqual) {
        row[next_slack++] = -1;
        row[next_artificial] = 1;
        basic = next_artificial++;
      } else {
        row[next_artificial] = 1;
        basic = next_artificial++;
      }
      rows_.push_back(std::move(row));
      rhs_.push_back(flip ? Rational(-c.rhs) : c.rhs);
      basis_.push_back(basic);
    }
  }

  // Minimizes the cost vector over the non-artificial columns (plus the
  // artificial ones when `allow_artificial`). Returns false when unbounded.
  bool minimize(const std::vector<Rational>& cost, bool allow_artificial) {
    const std::size_t limit = allow_artificial ? cols_ : first_artificial_;
    std::vector<Rational> reduced(cost);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (rows_[i][j] != 0) reduced[j] -= cb * rows_[i][j];
      }
    }
    for (;;) {
      // Bland: lowest-index improving column, lowest-index leaving basic.
      std::size_t entering = kNone;
      for (std::size_t j = 0; j < limit; ++j) {
        if (reduced[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering == kNone) return true;

      std::size_t leaving = kNone;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][entering];
        if (a <= 0) continue;
        Rational ratio = rhs_[i] / a;
        if (leaving == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == kNone) return false;

      pivot(leaving, entering);
      const Rational factor = reduced[entering];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (rows_[leaving][j] != 0) reduced[j] -= factor * rows_[leaving][j];
      }
    }
  }

  Rational cost_value(const std::vector<Rational>& cost) const {
    Rational value = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) value += cost[basis_[i]] * rhs_[i];
    return value;
  }

  // After a successful phase one, pivots artificial basics out of the basis
  // or drops their (redundant) rows.
  void expel_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      std::size_t column = kNone;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (rows_[i][j] != 0) {
          column = j;
          break;
        }
      }
      if (column == kNone) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(i, column);
      ++i;
    }
  }

  std::vector<Rational> phase_one_cost() const {
    std::vector<Rational> cost(cols_);
    for (std::size_t j = first_artificial_; j < cols_; ++j) cost[j] = 1;
    return cost;
  }

  std::vector<Rational> phase_two_cost() const {
    std::vector<Rational> cost(cols_);
    const auto& objective = lp_.objective();
    for (std::size_t j = 0; j < objective.size(); ++j) {
      Rational c = lp_.sense() == Sense::Maximize ? Rational(-objective[j]) : objective[j];
      cost[positive_col_[j]] = c;
      if (negative_col_[j] != kNone) cost[negative_col_[j]] = -c;
    }
    return cost;
  }

  std::vector<Rational> witness() const {
    std::vector<Rational> column_value(cols_);
    for (std::size_t i = 0; i < rows_.size(); ++i) column_value[basis_[i]] = rhs_[i];
    std::vector<Rational> x(lp_.num_variables());
    for (std::size_t j = 0; j < x.size(); ++j) {
      x[j] = column_value[positive_col_[j]];
      if (negative_col_[j] != kNone) x[j] -= column_value[negative_col_[j]];
    }
    return x;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void pivot(std::size_t row, std::size_t column) {
    const Rational pivot_value = rows_[row][column];
    for (auto& a : rows_[row]) {
      if (a != 0) a /= pivot_value;
    }
    rhs_[row] /= pivot_value;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == row) continue;
      const Rational factor = rows_[i][column];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (rows_[row][j] != 0) rows_[i][j] -= factor * rows_[row][j];
      }
      rhs_[i] -= factor * rhs_[row];
    }
    basis_[row] = column;
  }

  const LinearProgram& lp_;
  std::size_t structural_ = 0;
  std::size_t first_artificial_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> positive_col_;
  std::vector<std::size_t> negative_col_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
};

void require_constraints(const LinearProgram& lp) {
  if (lp.constraints().empty()) {
    throw std::invalid_argument("linear program has no constraints");
  }
}

// Runs phase one; returns false when the constraint set is empty.
bool phase_one(Tableau& tableau) {
  auto cost = tableau.phase_one_cost();
  tableau.minimize(cost, true);  // bounded below by zero
  if (tableau.cost_value(cost) != 0) return false;
  tableau.expel_artificials();
  return true;
}

}  // namespace

Result solve(const LinearProgram& lp) {
  require_constraints(lp);
  Tableau tableau(lp);
  Result result;
  if (!phase_one(tableau)) {
    result.status = Status::Infeasible;
  } else if (!tableau.minimize(tableau.phase_two_cost(), false)) {
    result.status = Status::Unbounded;
  } else {
    result.status = Status::Optimal;
    result.witness = tableau.witness();
    result.value = lp.evaluate(result.witness);
  }
  detail::record_solve(lp, result, false);
  return result;
}

Result feasible(const LinearProgram& lp) {
  require_constraints(lp);
  Tableau tableau(lp);
  Result result;
  if (phase_one(tableau)) {
    result.status = Status::Optimal;
    result.witness = tableau.witness();
    result.value = 0;
  }
  detail::record_solve(lp, result, true);
  return result;
}

bool satisfies(const LinearProgram& lp, std::span<const Rational> x) {
  if (x.size() != lp.num_variables()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!lp.is_free(j) && x[j] < 0) return false;
  }
  for (const auto& c : lp.constraints()) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += c.coefficients[j] * x[j];
    switch (c.relation) {
      case Relation::LessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::GreaterEqual:
        if (lhs < c.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

SolveRecorder::SolveRecorder() : previous_(active_recorder) { active_recorder = this; }

SolveRecorder::~SolveRecorder() { active_recorder = previous_; }

namespace detail {

void record_solve(const LinearProgram& lp, const Result& result, bool feasibility_only) {
  for (auto* r = active_recorder; r != nullptr; r = r->previous_) {
    r->records_.push_back({lp, result, feasibility_only});
  }
}

}  // namespace detail

}  // namespace cohere::lp
