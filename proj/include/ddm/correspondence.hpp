#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ddm/finite_space.hpp"
#include "ddm/manifold.hpp"

namespace ddm {

/// Three finite spaces built from one manifold and the isomorphisms between them:
/// the generated space, the symbolic substitute of its polyhedron, and the
/// substitute recomputed from sampled points.
struct CorrespondenceReport {
  FiniteSpace generated;
  FiniteSpace simplicial;
  FiniteSpace sampled;
  std::optional<std::vector<std::size_t>> generated_to_simplicial;
  std::optional<std::vector<std::size_t>> generated_to_sampled;
  std::size_t per_cell = 0;
  std::uint64_t seed = 0;
  std::string witness;  // empty when isomorphic

  bool isomorphic() const { return generated_to_simplicial.has_value() && generated_to_sampled.has_value(); }
};

/// Throws InfiniteDimensional or StructureViolation. Points of the two
/// substitutes carry the label of the unique nonvanishing word on their simplex.
CorrespondenceReport verify_correspondence(const DiscreteManifold& m, std::size_t per_cell,
                                           std::uint64_t seed, bool parallel = true);

/// Seed-independent part of the text report.
std::string render_symbolic(const CorrespondenceReport& report);
/// Sampled part of the text report; depends on seed and per_cell.
std::string render_sampled(const CorrespondenceReport& report);
std::string render_text(const CorrespondenceReport& report);
nlohmann::ordered_json to_json(const CorrespondenceReport& report);

}  // namespace ddm
