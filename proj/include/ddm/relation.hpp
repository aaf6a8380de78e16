#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ddm/word.hpp"

namespace ddm {

/// Reflexive binary relation i <= j on {0..size-1}. The diagonal is always set.
class Relation {
 public:
  explicit Relation(std::size_t size);

  static Relation from_pairs(std::size_t size, const std::vector<std::pair<Vertex, Vertex>>& pairs);

  std::size_t size() const noexcept { return size_; }
  bool related(Vertex i, Vertex j) const { return adjacency_[i * size_ + j] != 0; }
  void relate(Vertex i, Vertex j);

  /// Some i != j with i <= j and j <= i, smallest i first; nullopt if antisymmetric.
  std::optional<std::pair<Vertex, Vertex>> antisymmetry_witness() const;

  /// Off-diagonal pairs in row-major order.
  std::vector<std::pair<Vertex, Vertex>> pairs() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t size_;
  std::vector<unsigned char> adjacency_;
};

}  // namespace ddm
