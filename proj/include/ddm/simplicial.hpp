#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ddm/vertex_table.hpp"
#include "ddm/word.hpp"

namespace ddm {

/// Sorted vertex set.
using Simplex = std::vector<Vertex>;

/// Abstract simplicial complex: a hereditary family of nonempty vertex sets
/// containing every singleton. Simplices are kept grade-major, then lexicographic.
class SimplicialComplex {
 public:
  /// Adds every nonempty face and every singleton. `added` (optional) receives
  /// the faces that were not listed explicitly.
  static SimplicialComplex closure(VertexTable vertices, std::vector<Simplex> simplices,
                                   std::vector<Simplex>* added = nullptr);

  /// Accepts only an already hereditary family; throws StructureViolation otherwise.
  static SimplicialComplex validated(VertexTable vertices, std::vector<Simplex> simplices);

  const VertexTable& vertices() const noexcept { return vertices_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
  std::size_t size() const noexcept { return simplices_.size(); }
  std::size_t dimension() const { return simplices_.back().size() - 1; }

  std::optional<std::size_t> index_of(const Simplex& simplex) const;
  bool contains(const Simplex& simplex) const { return index_of(simplex).has_value(); }

  std::string label(const Simplex& simplex) const { return vertices_.join(simplex); }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertices_ == b.vertices_ && a.simplices_ == b.simplices_;
  }

 private:
  SimplicialComplex(VertexTable vertices, std::vector<Simplex> simplices)
      : vertices_(std::move(vertices)), simplices_(std::move(simplices)) {}

  VertexTable vertices_;
  std::vector<Simplex> simplices_;
};

/// Grade-major, then lexicographic.
bool simplex_less(const Simplex& a, const Simplex& b);

bool is_face(const Simplex& face, const Simplex& simplex);

}  // namespace ddm
