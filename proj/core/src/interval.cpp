#include "cohere/interval.hpp"

#include <stdexcept>

namespace cohere {

Interval::Interval(Rational lo, Rational hi, bool lo_open, bool hi_open)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_open_(lo_open), hi_open_(hi_open) {
  if (lo_ > hi_) {
    throw std::invalid_argument("interval lower end " + lo_.str() + " exceeds upper end " +
                                hi_.str());
  }
  if (lo_ == hi_ && (lo_open_ || hi_open_)) {
    throw std::invalid_argument("degenerate interval at " + lo_.str() + " cannot be open");
  }
}

bool Interval::contains(const Rational& x) const {
  bool above = lo_open_ ? x > lo_ : x >= lo_;
  bool below = hi_open_ ? x < hi_ : x <= hi_;
  return above && below;
}

bool Interval::contains(const Interval& other) const {
  bool lo_ok = other.lo_ > lo_ || (other.lo_ == lo_ && (!lo_open_ || other.lo_open_));
  bool hi_ok = other.hi_ < hi_ || (other.hi_ == hi_ && (!hi_open_ || other.hi_open_));
  return lo_ok && hi_ok;
}

std::string Interval::to_string() const {
  if (is_point()) return "{" + lo_.str() + "}";
  return std::string(lo_open_ ? "]" : "[") + lo_.str() + ", " + hi_.str() + (hi_open_ ? "[" : "]");
}

Box closure(const Box& box) {
  Box out;
  out.reserve(box.size());
  for (const auto& i : box) out.push_back(i.closure());
  return out;
}

bool is_closed(const Box& box) {
  for (const auto& i : box) {
    if (!i.is_closed()) return false;
  }
  return true;
}

bool contains(const Box& box, std::span<const Rational> point) {
  if (box.size() != point.size()) return false;
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (!box[i].contains(point[i])) return false;
  }
  return true;
}

Box point_box(std::span<const Rational> point) {
  Box out;
  out.reserve(point.size());
  for (const auto& p : point) out.push_back(Interval::point(p));
  return out;
}

void require_unit_box(const Box& box) {
  for (const auto& i : box) {
    if (i.lo() < 0 || i.hi() > 1) {
      throw std::invalid_argument("interval " + i.to_string() + " leaves [0, 1]");
    }
  }
}

void require_unit_point(std::span<const Rational> point) {
  for (const auto& p : point) {
    if (!in_unit_interval(p)) {
      throw std::invalid_argument("probability value " + p.str() + " leaves [0, 1]");
    }
  }
}

std::string to_string(std::span<const Rational> point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ", ";
    out += point[i].str();
  }
  return out + ")";
}

}  // namespace cohere
