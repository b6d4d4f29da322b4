#include "cohere/sampling.hpp"

#include <algorithm>

namespace cohere {

namespace {

constexpr std::uint64_t kGrid = std::uint64_t{1} << CandidateSequence::kMaxDyadicExponent;
constexpr std::size_t kMaxRepeats = 256;

}  // namespace

CandidateSequence::CandidateSequence(Box box, std::uint64_t seed,
                                     std::vector<PreciseAssessment> hints)
    : box_(std::move(box)), hints_(std::move(hints)), rng_(seed) {
  for (std::size_t i = 0; i < box_.size(); ++i) {
    if (!box_[i].is_point()) varying_.push_back(i);
  }
}

PreciseAssessment CandidateSequence::corner(unsigned exponent, std::size_t index) const {
  const Rational step = Rational(1, Integer(1) << exponent);
  PreciseAssessment p;
  p.reserve(box_.size());
  for (const auto& iv : box_) p.push_back(iv.lo());
  const std::size_t d = varying_.size();
  for (std::size_t v = 0; v < d; ++v) {
    const Interval& iv = box_[varying_[v]];
    const Rational offset = (iv.hi() - iv.lo()) * step;
    // First varying coordinate is the most significant bit: low ends first.
    const bool high = d - 1 - v < 64 && ((index >> (d - 1 - v)) & 1U) != 0;
    if (high) {
      p[varying_[v]] = iv.hi_open() ? Rational(iv.hi() - offset) : iv.hi();
    } else {
      p[varying_[v]] = iv.lo_open() ? Rational(iv.lo() + offset) : iv.lo();
    }
  }
  return p;
}

PreciseAssessment CandidateSequence::random_point() {
  PreciseAssessment p;
  p.reserve(box_.size());
  for (const auto& iv : box_) {
    if (iv.is_point()) {
      p.push_back(iv.lo());
      continue;
    }
    const std::uint64_t low = iv.lo_open() ? 1 : 0;
    const std::uint64_t high = iv.hi_open() ? kGrid - 1 : kGrid;
    const std::uint64_t r = low + rng_() % (high - low + 1);
    p.push_back(iv.lo() + (iv.hi() - iv.lo()) * Rational(r, kGrid));
  }
  return p;
}

bool CandidateSequence::fresh(const PreciseAssessment& p) { return seen_.insert(p).second; }

std::optional<PreciseAssessment> CandidateSequence::next() {
  const std::size_t d = varying_.size();
  const std::size_t corners =
      d >= 6 ? kMaxCornersPerLevel : std::min(kMaxCornersPerLevel, std::size_t{1} << d);

  while (exponent_ <= kMaxDyadicExponent) {
    if (exponent_ == 2 && !hints_done_) {
      while (hint_ < hints_.size()) {
        auto& h = hints_[hint_++];
        if (contains(box_, h) && fresh(h)) return h;
      }
      hints_done_ = true;
    }
    if (corner_ >= corners) {
      ++exponent_;
      corner_ = 0;
      continue;
    }
    auto p = corner(exponent_, corner_++);
    if (fresh(p)) return p;
  }

  for (std::size_t repeats = 0; repeats < kMaxRepeats; ++repeats) {
    auto p = random_point();
    if (fresh(p)) return p;
  }
  return std::nullopt;
}

}  // namespace cohere
