#pragma once

#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cohere/event.hpp"

namespace cohere::detail {

using Table = boost::dynamic_bitset<>;

// Bit w of a table is the event's value in world w. World w assigns atom i
// (in sorted order) the bit (n-1-i) of w, so ascending w is lexicographic
// with false before true.
class TruthTable {
 public:
  explicit TruthTable(std::vector<std::string> atoms);

  static TruthTable over(std::span<const Event> events);
  static TruthTable over(std::span<const ConditionalEvent> family);

  Table eval(const Event& e) const;

  std::size_t num_worlds() const { return std::size_t{1} << atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  World world(std::size_t index) const;

 private:
  std::vector<std::string> atoms_;
  std::vector<Table> columns_;
};

}  // namespace cohere::detail
