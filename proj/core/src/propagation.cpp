#include "cohere/propagation.hpp"

#include <algorithm>

#include "cohere/lp.hpp"
#include "cohere/sampling.hpp"
#include "mass_system.hpp"

namespace cohere {

namespace {

enum class Side { Lower, Upper };

struct BoundOutcome {
  Rational value;
  ZeroLayerTrace trace;
  std::vector<std::string> branch;
};

BoundOutcome bound(std::span<const ConditionalEvent> family, const Box& box,
                   const ConditionalEvent& target, Side side) {
  const std::string tag = side == Side::Lower ? "lower" : "upper";
  const Rational fixed = side == Side::Lower ? 0 : 1;
  const std::size_t target_index = family.size();

  BoundOutcome out;
  std::vector<std::size_t> active(family.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;

  for (std::size_t pass = 1;; ++pass) {
    const std::string where = tag + ":pass" + std::to_string(pass) + ":";
    std::vector<ConditionalEvent> members;
    for (auto i : active) members.push_back(family[i]);
    members.push_back(target);
    detail::MassSystem system(members);
    const std::size_t t = active.size();

    auto premises = system.empty_program();
    for (std::size_t k = 0; k < active.size(); ++k) {
      system.add_bounds(premises, k, box[active[k]].lo(), box[active[k]].hi());
    }

    auto fixed_system = premises;
    system.add_bounds(fixed_system, t, fixed, fixed);
    system.add_normalization(fixed_system);

    TraceLevel level;
    level.active = active;
    level.active.push_back(target_index);
    level.feasible = lp::feasible(fixed_system).status == lp::Status::Optimal;

    if (!level.feasible) {
      // Optimize the target numerator with the target antecedent normalized.
      auto optimum = premises;
      optimum.add_constraint(system.antecedent(t), lp::Relation::Equal, 1);
      optimum.set_objective(system.conjunction(t),
                            side == Side::Lower ? lp::Sense::Minimize : lp::Sense::Maximize);
      auto result = lp::solve(optimum);
      if (result.status != lp::Status::Optimal) {
        throw std::logic_error("bound optimization failed on a g-coherent assessment");
      }
      out.value = result.value;
      out.branch.push_back(where + (side == Side::Lower ? "minimum" : "maximum"));
      out.trace.levels.push_back(std::move(level));
      return out;
    }

    out.value = fixed;
    if (active.empty()) {
      out.branch.push_back(where + "no-premise-layer");
      out.trace.levels.push_back(std::move(level));
      return out;
    }

    Rational target_max;
    for (std::size_t k = 0; k <= t; ++k) {
      fixed_system.set_objective(system.antecedent(k), lp::Sense::Maximize);
      auto result = lp::solve(fixed_system);
      if (result.status != lp::Status::Optimal) {
        throw std::logic_error("antecedent mass maximization did not reach an optimum");
      }
      level.maxima.push_back(result.value);
      const std::size_t original = k < t ? active[k] : target_index;
      if (result.value == 0) level.zero_set.push_back(original);
      if (k == t) target_max = result.value;
    }

    if (target_max > 0) {
      out.branch.push_back(where + "target-positive");
      out.trace.levels.push_back(std::move(level));
      return out;
    }
    for (auto i : level.zero_set) {
      if (i != target_index) level.restart.push_back(i);
    }
    active = level.restart;
    out.trace.levels.push_back(std::move(level));
  }
}

}  // namespace

PropagationResult propagate(std::span<const ConditionalEvent> family, const Box& box,
                            const ConditionalEvent& target) {
  if (!is_closed(box)) {
    throw std::invalid_argument("bound propagation needs a closed box");
  }
  auto premises = check_closed_box(box, family);
  if (!premises.g_coherent) {
    throw NotGCoherentError("premise assessment is not g-coherent");
  }

  auto lower = bound(family, box, target, Side::Lower);
  auto upper = bound(family, box, target, Side::Upper);
  if (lower.value > upper.value) {
    throw std::logic_error("propagated lower bound exceeds upper bound");
  }

  PropagationResult result;
  result.interval = Interval::closed(lower.value, upper.value);
  result.lower_trace = std::move(lower.trace);
  result.upper_trace = std::move(upper.trace);
  result.branch = std::move(lower.branch);
  result.branch.insert(result.branch.end(), upper.branch.begin(), upper.branch.end());
  return result;
}

PropagationResult propagate_point(std::span<const ConditionalEvent> family,
                                  std::span<const Rational> point,
                                  const ConditionalEvent& target) {
  return propagate(family, point_box(point), target);
}

Interval wt_bounds(const Rational& x, const Rational& y, const Rational& t) {
  if (!in_unit_interval(x) || !in_unit_interval(y) || !in_unit_interval(t)) {
    throw std::invalid_argument("weak transitivity inputs must lie in [0, 1]");
  }
  if (t == 0) return Interval::unit();
  Rational lo = x * y - (1 - t) * (1 - x) / t;
  Rational hi = (1 - x) * (1 - y) + x / t;
  return Interval::closed(std::max(Rational(0), lo), std::min(Rational(1), hi));
}

Interval cm_bounds(const Rational& x, const Rational& y) {
  if (!in_unit_interval(x) || !in_unit_interval(y)) {
    throw std::invalid_argument("cautious monotonicity inputs must lie in [0, 1]");
  }
  Rational lo = x + y > 1 ? Rational((x + y - 1) / y) : Rational(0);
  Rational hi = x < y ? Rational(x / y) : Rational(1);
  return Interval::closed(lo, hi);
}

ExtensionSet extension_set(const Box& box, std::span<const ConditionalEvent> family,
                           const ConditionalEvent& target, SearchOptions options) {
  auto closed = check_closed_box(closure(box), family);
  if (!closed.g_coherent) throw NotGCoherentError("assessment is not g-coherent");

  ExtensionSet out;
  out.outer = propagate(family, closure(box), target).interval;

  std::vector<WitnessedInterval> found;
  std::vector<PreciseAssessment> hints{closed.witness};
  CandidateSequence candidates(box, options.seed, std::move(hints));
  while (out.candidates_checked < options.budget) {
    auto point = candidates.next();
    if (!point) break;
    ++out.candidates_checked;
    if (!check_coherence(*point, family).coherent) continue;
    auto interval = propagate_point(family, *point, target).interval;
    found.push_back({interval, *point, *point});
  }
  if (found.empty()) throw NotGCoherentError("no coherent witness found in the box");

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.interval.lo() != b.interval.lo()) return a.interval.lo() < b.interval.lo();
    return a.interval.hi() > b.interval.hi();
  });
  for (auto& w : found) {
    if (!out.inner.empty() && w.interval.lo() <= out.inner.back().interval.hi()) {
      auto& last = out.inner.back();
      if (w.interval.hi() > last.interval.hi()) {
        last.interval = Interval::closed(last.interval.lo(), w.interval.hi());
        last.hi_witness = w.hi_witness;
      }
      continue;
    }
    out.inner.push_back(std::move(w));
  }
  return out;
}

}  // namespace cohere
