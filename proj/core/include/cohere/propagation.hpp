#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cohere/coherence.hpp"

namespace cohere {

class NotGCoherentError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct PropagationResult {
  /// Closed interval [z', z''] of coherent extensions to the target.
  Interval interval = Interval::unit();
  ZeroLayerTrace lower_trace;
  ZeroLayerTrace upper_trace;
  /// Which branch produced each bound, e.g. `lower:pass1:minimum` or
  /// `upper:pass2:target-positive`.
  std::vector<std::string> branch;
};

/// Lower and upper probability bounds on `target` implied by a closed box on
/// `family`. Each bound fixes the target value (0 or 1) and tests the mass
/// system; if unsolvable, the bound is the optimum of the target's numerator
/// mass with the target's antecedent mass normalized to one; otherwise the
/// procedure stops when the target's antecedent can carry positive mass, and
/// restarts on the zero-layer premises otherwise. With no zero-layer premise
/// left, a last pass on the target alone decides whether it is free.
///
/// Throws NotGCoherentError when the box is not g-coherent on the family and
/// std::invalid_argument when the box has open endpoints.
PropagationResult propagate(std::span<const ConditionalEvent> family, const Box& box,
                            const ConditionalEvent& target);

PropagationResult propagate_point(std::span<const ConditionalEvent> family,
                                  std::span<const Rational> point,
                                  const ConditionalEvent& target);

/// Coherent interval for p(C|A) from (p(C|B), p(B|A), p(A|A or B)) = (x, y, t).
Interval wt_bounds(const Rational& x, const Rational& y, const Rational& t);

/// Coherent interval for p(C|AB) from (p(C|A), p(B|A)) = (x, y).
Interval cm_bounds(const Rational& x, const Rational& y);

struct WitnessedInterval {
  Interval interval;
  PreciseAssessment lo_witness;
  PreciseAssessment hi_witness;
};

struct ExtensionSet {
  /// Union of coherent-extension intervals of sampled witnesses, merged where
  /// they touch. Every endpoint is attained by the recorded witness.
  std::vector<WitnessedInterval> inner;
  /// Propagation over the closure of the box.
  Interval outer = Interval::unit();
  std::size_t candidates_checked = 0;
};

/// Throws NotGCoherentError unless a coherent witness of the box is found.
ExtensionSet extension_set(const Box& box, std::span<const ConditionalEvent> family,
                           const ConditionalEvent& target, SearchOptions options = {});

}  // namespace cohere
