#pragma once

#include <string>
#include <vector>

namespace cohere::tools {

struct SuiteResult {
  std::string name;
  std::size_t points = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> details;
};

// Closed forms against the generic propagation engine on a 1/denominator grid.
SuiteResult verify_weak_transitivity(unsigned denominator);
SuiteResult verify_cautious_monotonicity(unsigned denominator);
// Vertex checks of the unit box on the two three-member families.
SuiteResult verify_total_coherence();

}  // namespace cohere::tools
