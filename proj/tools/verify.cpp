#include "verify.hpp"

#include <cohere/coherence.hpp>
#include <cohere/propagation.hpp>

namespace cohere::tools {

namespace {

std::vector<Rational> grid(unsigned denominator) {
  std::vector<Rational> out;
  for (unsigned k = 0; k <= denominator; ++k) out.emplace_back(k, denominator);
  return out;
}

}  // namespace

SuiteResult verify_weak_transitivity(unsigned denominator) {
  const Event a = Event::atom("A"), b = Event::atom("B"), c = Event::atom("C");
  const Family family{{c, b}, {b, a}, {a, a | b}};
  const ConditionalEvent target(c, a);

  SuiteResult out;
  out.name = "weak-transitivity";
  const auto values = grid(denominator);
  for (const auto& x : values) {
    for (const auto& y : values) {
      for (const auto& t : values) {
        ++out.points;
        const PreciseAssessment p{x, y, t};
        auto engine = propagate_point(family, p, target).interval;
        auto closed = wt_bounds(x, y, t);
        if (engine != closed) {
          ++out.mismatches;
          out.details.push_back(to_string(p) + ": engine " + engine.to_string() +
                                ", closed form " + closed.to_string());
        }
      }
    }
  }
  return out;
}

SuiteResult verify_cautious_monotonicity(unsigned denominator) {
  const Event a = Event::atom("A"), b = Event::atom("B"), c = Event::atom("C");
  const Family family{{c, a}, {b, a}};
  const ConditionalEvent target(c, a & b);

  SuiteResult out;
  out.name = "cautious-monotonicity";
  const auto values = grid(denominator);
  for (const auto& x : values) {
    for (const auto& y : values) {
      ++out.points;
      const PreciseAssessment p{x, y};
      auto engine = propagate_point(family, p, target).interval;
      auto closed = cm_bounds(x, y);
      if (engine != closed) {
        ++out.mismatches;
        out.details.push_back(to_string(p) + ": engine " + engine.to_string() +
                              ", closed form " + closed.to_string());
      }
    }
  }
  return out;
}

SuiteResult verify_total_coherence() {
  const Event a = Event::atom("A"), b = Event::atom("B"), c = Event::atom("C");
  const Family wt{{c, b}, {b, a}, {a, a | b}};
  const Family transitivity{{c, b}, {b, a}, {c, a}};

  SuiteResult out;
  out.name = "total-coherence";
  for (const auto* family : {&wt, &transitivity}) {
    out.points += std::size_t{1} << family->size();
    if (!total_coherence_unit_box(*family)) {
      ++out.mismatches;
      std::string name;
      for (const auto& m : *family) name += m.to_string();
      out.details.push_back(name + ": some vertex is incoherent");
    }
  }
  return out;
}

}  // namespace cohere::tools
