#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cohere/rational.hpp"

namespace cohere::lp {

enum class Relation { LessEqual, GreaterEqual, Equal };
enum class Sense { Minimize, Maximize };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation;
  Rational rhs;
};

/// Dense linear program over exact rationals. Variables are non-negative
/// unless marked free.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_variables);

  std::size_t num_variables() const { return num_variables_; }

  /// Throws std::invalid_argument when the row length differs from the
  /// variable count.
  void add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs);
  /// An empty objective means pure feasibility.
  void set_objective(std::vector<Rational> coefficients, Sense sense);
  void set_free(std::size_t variable, bool free = true);

  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<Rational>& objective() const { return objective_; }
  Sense sense() const { return sense_; }
  bool is_free(std::size_t variable) const { return free_.at(variable); }

  /// Objective value at `x` (zero for an empty objective).
  Rational evaluate(std::span<const Rational> x) const;

 private:
  std::size_t num_variables_;
  std::vector<Constraint> constraints_;
  std::vector<Rational> objective_;
  Sense sense_ = Sense::Minimize;
  std::vector<bool> free_;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> witness;
};

/// Two-phase primal simplex with Bland's rule. The witness of an OPTIMAL
/// result satisfies every constraint exactly and attains `value`.
Result solve(const LinearProgram& lp);

/// Phase one only. Status is Optimal (feasible, with witness) or Infeasible.
Result feasible(const LinearProgram& lp);

/// Exact check of every constraint and sign restriction at `x`.
bool satisfies(const LinearProgram& lp, std::span<const Rational> x);


namespace detail {
void record_solve(const LinearProgram& lp, const Result& result, bool feasibility_only);
}

struct SolveRecord {
  LinearProgram program;
  Result result;
  bool feasibility_only;
};

/// While alive, captures every solve()/feasible() call made on this thread.
/// Nested recorders each see the calls made during their own lifetime.
class SolveRecorder {
 public:
  SolveRecorder();
  ~SolveRecorder();
  SolveRecorder(const SolveRecorder&) = delete;
  SolveRecorder& operator=(const SolveRecorder&) = delete;

  const std::vector<SolveRecord>& records() const { return records_; }

 private:
  friend void detail::record_solve(const LinearProgram&, const Result&, bool);
  std::vector<SolveRecord> records_;
  SolveRecorder* previous_;
};

}  // namespace cohere::lp
