#pragma once

// Data-parallel inner loops. Each OpenMP kernel has a serial twin that is the
// reference for tests and the baseline for bench/.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ddm/coarse_graining.hpp"

namespace ddm::kernels {

/// trace[p] has bit s set iff faces[s] is inside supports[p].
std::vector<PointSet> star_traces_serial(std::span<const PointSet> supports,
                                         std::span<const PointSet> faces);
std::vector<PointSet> star_traces_parallel(std::span<const PointSet> supports,
                                           std::span<const PointSet> faces);

/// trace[p] has bit s set iff arcs[s] contains angles[p].
std::vector<PointSet> arc_traces_serial(std::span<const mpq_class> angles, std::span<const Arc> arcs);
std::vector<PointSet> arc_traces_parallel(std::span<const mpq_class> angles, std::span<const Arc> arcs);

/// per_cell samples of every simplex of p, cell-major, each cell seeded by cell_seed.
std::vector<SamplePoint> sample_cells_serial(const SimplicialComplex& p, std::size_t per_cell,
                                             std::uint64_t seed);
std::vector<SamplePoint> sample_cells_parallel(const SimplicialComplex& p, std::size_t per_cell,
                                               std::uint64_t seed);

}  // namespace ddm::kernels
