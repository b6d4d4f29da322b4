#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "cohere/interval.hpp"

namespace cohere {

/// Deterministic stream of distinct points of a box, respecting open
/// endpoints strictly. Order: corners pulled off open endpoints by
/// (hi - lo) / 2^k for k = 1..16 (at most 64 corners per k), the hint points
/// right after the k = 1 corners, then seeded uniform points on a 2^-16 grid.
class CandidateSequence {
 public:
  static constexpr unsigned kMaxDyadicExponent = 16;
  static constexpr std::size_t kMaxCornersPerLevel = 64;

  CandidateSequence(Box box, std::uint64_t seed, std::vector<PreciseAssessment> hints = {});

  /// Next unseen point, or nullopt when the stream is exhausted (the random
  /// phase gives up after a long run of repeats, e.g. for a point box).
  std::optional<PreciseAssessment> next();

 private:
  PreciseAssessment corner(unsigned exponent, std::size_t index) const;
  PreciseAssessment random_point();
  bool fresh(const PreciseAssessment& p);

  Box box_;
  std::vector<std::size_t> varying_;
  std::vector<PreciseAssessment> hints_;
  std::mt19937_64 rng_;
  std::set<PreciseAssessment> seen_;

  unsigned exponent_ = 1;
  std::size_t corner_ = 0;
  std::size_t hint_ = 0;
  bool hints_done_ = false;
};

}  // namespace cohere
