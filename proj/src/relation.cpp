#include "ddm/relation.hpp"

#include <string>

#include "ddm/error.hpp"

namespace ddm {

Relation::Relation(std::size_t size) : size_(size), adjacency_(size * size, 0) {
  for (std::size_t i = 0; i < size; ++i) adjacency_[i * size + i] = 1;
}

Relation Relation::from_pairs(std::size_t size, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  Relation rel(size);
  for (auto [i, j] : pairs) rel.relate(i, j);
  return rel;
}

void Relation::relate(Vertex i, Vertex j) {
  if (i >= size_ || j >= size_) {
    throw Error(ErrorCode::IndexOutOfRange,
                "pair (" + std::to_string(i) + "," + std::to_string(j) + ") outside relation of size " +
                    std::to_string(size_));
  }
  adjacency_[i * size_ + j] = 1;
}

std::optional<std::pair<Vertex, Vertex>> Relation::antisymmetry_witness() const {
  for (Vertex i = 0; i < size_; ++i) {
    for (Vertex j = i + 1; j < size_; ++j) {
      if (related(i, j) && related(j, i)) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

std::vector<std::pair<Vertex, Vertex>> Relation::pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex i = 0; i < size_; ++i) {
    for (Vertex j = 0; j < size_; ++j) {
      if (i != j && related(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace ddm
