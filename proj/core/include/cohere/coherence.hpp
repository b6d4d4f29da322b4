#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cohere/event.hpp"
#include "cohere/interval.hpp"
#include "cohere/rational.hpp"

namespace cohere {

using Family = std::vector<ConditionalEvent>;

/// One pass of the zero-layer recursion. Indices refer to the original
/// family; for bound propagation the target is index `family.size()`.
struct TraceLevel {
  std::vector<std::size_t> active;
  bool feasible = false;
  /// Maximum antecedent mass over the solutions, aligned with `active`.
  /// Empty when the system was infeasible.
  std::vector<Rational> maxima;
  /// Indices whose antecedent mass is zero in every solution.
  std::vector<std::size_t> zero_set;
  /// Indices the next pass restarts on (empty when the recursion stops).
  std::vector<std::size_t> restart;
};

struct ZeroLayerTrace {
  std::vector<TraceLevel> levels;
};

struct CoherenceResult {
  bool coherent = false;
  ZeroLayerTrace trace;
};

/// Exact coherence check of a precise assessment. Throws std::invalid_argument
/// when lengths differ or a value leaves [0,1].
CoherenceResult check_coherence(std::span<const Rational> assessment,
                                std::span<const ConditionalEvent> family);

struct ClosedBoxResult {
  bool g_coherent = false;
  /// Coherent point of the box, read off the recursion's solutions.
  PreciseAssessment witness;
  ZeroLayerTrace trace;
};

/// Decides g-coherence of a closed box through the inequality-system version
/// of the zero-layer recursion. Open endpoints are treated as closed.
ClosedBoxResult check_closed_box(const Box& box, std::span<const ConditionalEvent> family);

enum class GStatus { GCoherent, NotGCoherent, Unknown };

struct SearchOptions {
  /// Maximum number of distinct candidate points checked.
  std::size_t budget = 1000;
  std::uint64_t seed = 0;
};

struct GCoherenceResult {
  GStatus status = GStatus::Unknown;
  /// Present iff status is GCoherent; lies in the box and passes check_coherence.
  std::optional<PreciseAssessment> witness;
  /// Trace of the closed-relaxation recursion.
  ZeroLayerTrace trace;
  std::size_t candidates_checked = 0;
};

/// g-coherence of a box that may have open endpoints. NotGCoherent is only
/// reported when the closed relaxation is refuted; GCoherent always carries a
/// verified witness; Unknown means neither happened within the budget.
GCoherenceResult check_g_coherence_box(const Box& box, std::span<const ConditionalEvent> family,
                                       SearchOptions options = {});

inline constexpr std::size_t kMaxTotalCoherenceFamily = 12;

/// Total coherence of [0,1]^n, certified by checking all 2^n vertices.
/// Throws std::length_error above kMaxTotalCoherenceFamily members.
bool total_coherence_unit_box(std::span<const ConditionalEvent> family);

}  // namespace cohere
