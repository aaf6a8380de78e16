#include "ddm/kernels.hpp"

#include <omp.h>

namespace ddm::kernels {

namespace {

PointSet star_trace(const PointSet& support, std::span<const PointSet> faces) {
  PointSet trace(faces.size());
  for (std::size_t s = 0; s < faces.size(); ++s) {
    if (faces[s].is_subset_of(support)) trace.set(s);
  }
  return trace;
}

PointSet arc_trace(const mpq_class& angle, std::span<const Arc> arcs) {
  PointSet trace(arcs.size());
  for (std::size_t s = 0; s < arcs.size(); ++s) {
    if (arc_contains(arcs[s], angle)) trace.set(s);
  }
  return trace;
}

void sample_cell(const SimplicialComplex& p, std::size_t per_cell, std::uint64_t seed, std::size_t cell,
                 std::vector<SamplePoint>& out) {
  auto points = sample(p, p.simplices()[cell], cell_seed(seed, cell), per_cell);
  std::move(points.begin(), points.end(), out.begin() + static_cast<std::ptrdiff_t>(cell * per_cell));
}

}  // namespace

std::vector<PointSet> star_traces_serial(std::span<const PointSet> supports,
                                         std::span<const PointSet> faces) {
  std::vector<PointSet> out(supports.size());
  for (std::size_t p = 0; p < supports.size(); ++p) out[p] = star_trace(supports[p], faces);
  return out;
}

std::vector<PointSet> star_traces_parallel(std::span<const PointSet> supports,
                                           std::span<const PointSet> faces) {
  std::vector<PointSet> out(supports.size());
  const auto n = static_cast<std::ptrdiff_t>(supports.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < n; ++p) out[p] = star_trace(supports[p], faces);
  return out;
}

std::vector<PointSet> arc_traces_serial(std::span<const mpq_class> angles, std::span<const Arc> arcs) {
  std::vector<PointSet> out(angles.size());
  for (std::size_t p = 0; p < angles.size(); ++p) out[p] = arc_trace(angles[p], arcs);
  return out;
}

std::vector<PointSet> arc_traces_parallel(std::span<const mpq_class> angles, std::span<const Arc> arcs) {
  std::vector<PointSet> out(angles.size());
  const auto n = static_cast<std::ptrdiff_t>(angles.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < n; ++p) out[p] = arc_trace(angles[p], arcs);
  return out;
}

std::vector<SamplePoint> sample_cells_serial(const SimplicialComplex& p, std::size_t per_cell,
                                             std::uint64_t seed) {
  std::vector<SamplePoint> out(p.size() * per_cell);
  for (std::size_t cell = 0; cell < p.size(); ++cell) sample_cell(p, per_cell, seed, cell, out);
  return out;
}

std::vector<SamplePoint> sample_cells_parallel(const SimplicialComplex& p, std::size_t per_cell,
                                               std::uint64_t seed) {
  std::vector<SamplePoint> out(p.size() * per_cell);
  const auto cells = static_cast<std::ptrdiff_t>(p.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t cell = 0; cell < cells; ++cell) {
    sample_cell(p, per_cell, seed, static_cast<std::size_t>(cell), out);
  }
  return out;
}

}  // namespace ddm::kernels
