#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ddm/ideal.hpp"

namespace ddm {

/// Product of the greedy subsequence-avoidance DFAs of the ideal's generators,
/// intersected with the no-equal-neighbours constraint. A state records how far
/// each generator has been matched plus the last letter read; only live states
/// (no generator fully matched) are materialized, and every live state accepts.
class AvoidanceAutomaton {
 public:
  explicit AvoidanceAutomaton(const BasicIdeal& ideal);

  std::size_t state_count() const noexcept { return transitions_.size(); }

  /// True iff a cycle is reachable, i.e. the avoiding language is infinite.
  bool has_cycle() const noexcept { return cyclic_; }

  /// Length of the longest accepted word; meaningful only without cycles.
  std::size_t longest_word() const noexcept { return longest_; }

 private:
  std::vector<std::vector<std::uint32_t>> transitions_;  // state 0 is the start
  bool cyclic_ = false;
  std::size_t longest_ = 0;
};

}  // namespace ddm
