#include "ddm/simplicial.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "ddm/error.hpp"

namespace ddm {

bool simplex_less(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool is_face(const Simplex& face, const Simplex& simplex) {
  return std::includes(simplex.begin(), simplex.end(), face.begin(), face.end());
}

namespace {

Simplex canonical(Simplex s, const VertexTable& vertices) {
  if (s.empty()) throw Error(ErrorCode::NotASimplex, "empty simplex");
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw Error(ErrorCode::NotASimplex, "simplex repeats a vertex");
  }
  if (s.back() >= vertices.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "simplex vertex outside the vertex table");
  }
  return s;
}

std::vector<Simplex> sorted_unique(std::set<Simplex> family) {
  std::vector<Simplex> out(family.begin(), family.end());
  std::sort(out.begin(), out.end(), simplex_less);
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::closure(VertexTable vertices, std::vector<Simplex> simplices,
                                             std::vector<Simplex>* added) {
  std::set<Simplex> listed;
  for (auto& s : simplices) listed.insert(canonical(std::move(s), vertices));
  std::set<Simplex> family;
  for (Vertex v = 0; v < vertices.size(); ++v) family.insert(Simplex{v});
  for (const auto& s : listed) {
    // All nonempty subsets; simplices here are small.
    const std::size_t n = s.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      Simplex face;
      for (std::size_t k = 0; k < n; ++k) {
        if (mask >> k & 1U) face.push_back(s[k]);
      }
      family.insert(std::move(face));
    }
  }
  if (added != nullptr) {
    added->clear();
    for (const auto& s : family) {
      if (!listed.count(s)) added->push_back(s);
    }
    std::sort(added->begin(), added->end(), simplex_less);
  }
  return SimplicialComplex(std::move(vertices), sorted_unique(std::move(family)));
}

SimplicialComplex SimplicialComplex::validated(VertexTable vertices, std::vector<Simplex> simplices) {
  std::vector<Simplex> added;
  auto complex = closure(std::move(vertices), std::move(simplices), &added);
  if (!added.empty()) {
    throw Error(ErrorCode::StructureViolation,
                "family is not hereditary: missing face " + complex.label(added.front()));
  }
  return complex;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& simplex) const {
  auto it = std::lower_bound(simplices_.begin(), simplices_.end(), simplex, simplex_less);
  if (it == simplices_.end() || *it != simplex) return std::nullopt;
  return static_cast<std::size_t>(it - simplices_.begin());
}

}  // namespace ddm
