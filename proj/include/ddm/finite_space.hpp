#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ddm/manifold.hpp"

namespace ddm {

using PointSet = boost::dynamic_bitset<>;

/// A finite (pre)topological space given by the smallest open set of each point.
/// Orientation: x <= y iff x lies in min_open(y), so min_open(y) is the down-set of y.
class FiniteSpace {
 public:
  /// Validates x in min_open(x) and nesting coherence; throws InvalidSpace.
  FiniteSpace(std::vector<std::string> labels, std::vector<PointSet> min_open);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const PointSet& min_open(std::size_t x) const { return min_open_.at(x); }
  bool leq(std::size_t x, std::size_t y) const { return min_open_[y].test(x); }
  std::optional<std::size_t> find(const std::string& label) const;

  FiniteSpace relabeled(std::vector<std::string> labels) const;

 private:
  std::vector<std::string> labels_;
  std::vector<PointSet> min_open_;
};

struct HasseDiagram {
  std::vector<std::string> nodes;
  /// Covering pairs (lower, upper), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Length of the longest chain below each node.
  std::vector<std::size_t> levels;
};

struct SpaceQuotient {
  FiniteSpace space;
  std::vector<std::size_t> class_of;
};

/// Generated space of a finite-dimensional manifold: points are the nonvanishing
/// words, min_open(a) = {b : a is a subword of b}. Throws InfiniteDimensional.
FiniteSpace generated_space(const DiscreteManifold& m);

bool is_t0(const FiniteSpace& space);

/// Merge points with identical minimal open sets. Classes are numbered by first
/// member; a class takes the label of its first member.
SpaceQuotient t0_quotient(const FiniteSpace& space);

/// All pairs (x, y) with x <= y, reflexive ones included.
std::vector<std::pair<std::size_t, std::size_t>> specialization_order(const FiniteSpace& space);

HasseDiagram hasse(const FiniteSpace& space);

/// Every open set (down-set). Throws TooLarge above 20 points.
std::vector<PointSet> open_sets(const FiniteSpace& space);
inline constexpr std::size_t kMaxOpenSetPoints = 20;

/// Order isomorphism a -> b by invariant pruning and backtracking. Candidates
/// with the same label are tried first, so label-preserving maps win when valid.
std::optional<std::vector<std::size_t>> poset_isomorphism(const FiniteSpace& a, const FiniteSpace& b);

std::string to_dot(const HasseDiagram& diagram, const std::string& name = "hasse");
nlohmann::ordered_json to_json(const FiniteSpace& space);

}  // namespace ddm
