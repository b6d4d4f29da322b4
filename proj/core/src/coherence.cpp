#include "cohere/coherence.hpp"

#include <stdexcept>
#include <string>

#include "cohere/lp.hpp"
#include "cohere/sampling.hpp"
#include "mass_system.hpp"

namespace cohere {

namespace {

struct Bound {
  Rational lo;
  Rational hi;
};

struct RecursionOutcome {
  bool feasible = false;
  PreciseAssessment witness;
  ZeroLayerTrace trace;
};

// Zero-layer recursion: solve the mass system of the active members, find the
// members whose antecedent mass is forced to zero and restart on them. The
// witness takes, at each pass, the ratio mass(EH)/mass(H) at the barycentre
// of the per-member maximizers, where every non-zero-layer antecedent has
// positive mass.
RecursionOutcome zero_layer(std::span<const ConditionalEvent> family,
                            std::span<const Bound> bounds) {
  RecursionOutcome out;
  out.witness.assign(family.size(), Rational(0));

  std::vector<std::size_t> active(family.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;

  while (!active.empty()) {
    std::vector<ConditionalEvent> members;
    for (auto i : active) members.push_back(family[i]);
    detail::MassSystem system(members);

    auto program = system.empty_program();
    for (std::size_t k = 0; k < active.size(); ++k) {
      system.add_bounds(program, k, bounds[active[k]].lo, bounds[active[k]].hi);
    }
    system.add_normalization(program);

    TraceLevel level;
    level.active = active;
    level.feasible = lp::feasible(program).status == lp::Status::Optimal;
    if (!level.feasible) {
      out.trace.levels.push_back(std::move(level));
      return out;
    }

    std::vector<Rational> barycentre(system.num_worlds());
    for (std::size_t k = 0; k < active.size(); ++k) {
      program.set_objective(system.antecedent(k), lp::Sense::Maximize);
      auto result = lp::solve(program);
      if (result.status != lp::Status::Optimal) {
        throw std::logic_error("antecedent mass maximization did not reach an optimum");
      }
      level.maxima.push_back(result.value);
      for (std::size_t r = 0; r < barycentre.size(); ++r) barycentre[r] += result.witness[r];
      if (result.value == 0) level.zero_set.push_back(active[k]);
    }
    for (auto& v : barycentre) v /= static_cast<unsigned>(active.size());

    for (std::size_t k = 0; k < active.size(); ++k) {
      if (level.maxima[k] == 0) continue;
      Rational h = detail::MassSystem::mass(system.antecedent(k), barycentre);
      Rational eh = detail::MassSystem::mass(system.conjunction(k), barycentre);
      out.witness[active[k]] = eh / h;
    }

    level.restart = level.zero_set;
    active = level.zero_set;
    out.trace.levels.push_back(std::move(level));
  }
  out.feasible = true;
  return out;
}

void require_aligned(std::size_t values, std::size_t members) {
  if (values != members) {
    throw std::invalid_argument("assessment has " + std::to_string(values) +
                                " values for a family of " + std::to_string(members));
  }
}

}  // namespace

CoherenceResult check_coherence(std::span<const Rational> assessment,
                                std::span<const ConditionalEvent> family) {
  require_aligned(assessment.size(), family.size());
  require_unit_point(assessment);
  if (family.empty()) throw std::invalid_argument("coherence of an empty family");

  std::vector<Bound> bounds;
  for (const auto& p : assessment) bounds.push_back({p, p});
  auto outcome = zero_layer(family, bounds);
  return {outcome.feasible, std::move(outcome.trace)};
}

ClosedBoxResult check_closed_box(const Box& box, std::span<const ConditionalEvent> family) {
  require_aligned(box.size(), family.size());
  require_unit_box(box);
  if (family.empty()) throw std::invalid_argument("coherence of an empty family");

  std::vector<Bound> bounds;
  for (const auto& iv : box) bounds.push_back({iv.lo(), iv.hi()});
  auto outcome = zero_layer(family, bounds);
  ClosedBoxResult result;
  result.g_coherent = outcome.feasible;
  if (outcome.feasible) result.witness = std::move(outcome.witness);
  result.trace = std::move(outcome.trace);
  return result;
}

GCoherenceResult check_g_coherence_box(const Box& box, std::span<const ConditionalEvent> family,
                                       SearchOptions options) {
  GCoherenceResult result;
  auto closed = check_closed_box(closure(box), family);
  result.trace = std::move(closed.trace);
  if (!closed.g_coherent) {
    result.status = GStatus::NotGCoherent;
    return result;
  }

  std::vector<PreciseAssessment> hints;
  hints.push_back(std::move(closed.witness));
  CandidateSequence candidates(box, options.seed, std::move(hints));
  while (result.candidates_checked < options.budget) {
    auto point = candidates.next();
    if (!point) break;
    ++result.candidates_checked;
    if (check_coherence(*point, family).coherent) {
      result.status = GStatus::GCoherent;
      result.witness = std::move(*point);
      return result;
    }
  }
  result.status = GStatus::Unknown;
  return result;
}

bool total_coherence_unit_box(std::span<const ConditionalEvent> family) {
  const std::size_t n = family.size();
  if (n == 0) throw std::invalid_argument("total coherence of an empty family");
  if (n > kMaxTotalCoherenceFamily) {
    throw std::length_error("vertex check over " + std::to_string(n) +
                            " members exceeds the cap of " +
                            std::to_string(kMaxTotalCoherenceFamily));
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    PreciseAssessment vertex(n);
    for (std::size_t i = 0; i < n; ++i) vertex[i] = (mask >> (n - 1 - i)) & 1U;
    if (!check_coherence(vertex, family).coherent) return false;
  }
  return true;
}

}  // namespace cohere
