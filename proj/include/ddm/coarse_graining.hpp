#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ddm/finite_space.hpp"
#include "ddm/simplicial.hpp"

namespace ddm {

/// Finite covering of a point collection, recorded as the trace of each point:
/// the set of cover sets containing it.
struct Covering {
  std::vector<std::string> cover_labels;
  std::vector<std::string> point_labels;
  std::vector<PointSet> traces;  // one per point, width = cover_labels.size()
};

/// T0 quotient of the covering topology. `class_of` maps points to classes.
struct Substitute {
  FiniteSpace space;
  std::vector<std::size_t> class_of;
};

/// Classes are the distinct traces, numbered by first point; x -> y iff
/// trace(y) is inside trace(x), so min_open(T) = {S : T inside S}. Classes are
/// labelled "{A,B}" from their traces. Throws UncoveredPoint.
Substitute trace_substitute(const Covering& covering);

/// {tau in p : sigma is a face of tau}. Throws NotASimplex.
std::vector<Simplex> star(const SimplicialComplex& p, const Simplex& sigma);

/// Cell label per simplex: the local interior I(sigma) is labelled by sigma.
std::vector<std::string> local_interiors(const SimplicialComplex& p);

/// Symbolic simplicial covering: one point per local-interior cell, one cover set
/// per open star interior; the cell of tau is in Int St(sigma) iff sigma <= tau.
Covering simplicial_covering(const SimplicialComplex& p);

/// Finitary substitute of |p| under the simplicial covering, points labelled by simplex.
FiniteSpace simplicial_substitute(const SimplicialComplex& p);

/// A point of |p| in the standard-basis realization.
struct SamplePoint {
  Simplex carrier;
  std::vector<mpq_class> barycentric;  // aligned with carrier, all > 0, sum 1
  std::vector<mpq_class> ambient;      // coordinates in Q^{|M|}
};

/// Vertex i goes to the i-th standard basis vector.
std::vector<std::vector<mpq_class>> realize(const SimplicialComplex& p);

SamplePoint make_sample_point(const SimplicialComplex& p, Simplex carrier, std::vector<mpq_class> weights);

/// `count` points with strictly positive rational barycentric weights in the
/// local interior of sigma, deterministic in `seed`. Throws NotASimplex.
std::vector<SamplePoint> sample(const SimplicialComplex& p, const Simplex& sigma, std::uint64_t seed,
                                std::size_t count);

/// Vertex support of an ambient point, i.e. the carrier of the cell containing it.
PointSet support_of(std::span<const mpq_class> ambient);

/// Per-cell seed used by sampled_substitute.
std::uint64_t cell_seed(std::uint64_t seed, std::size_t cell);

/// Samples every local interior, derives traces from ambient coordinates, and
/// takes the trace substitute. Classes are labelled by the carrier of their first
/// sample. `parallel` selects the OpenMP kernels; results are identical.
FiniteSpace sampled_substitute(const SimplicialComplex& p, std::size_t per_cell, std::uint64_t seed,
                               bool parallel = true);

/// Open arc of the unit circle, endpoints in units of pi. Arcs longer than 2
/// cover the whole circle.
struct Arc {
  std::string label;
  mpq_class lo;
  mpq_class hi;
};

/// Angle in units of pi, normalized to (-1, 1].
mpq_class normalize_angle(mpq_class angle);

bool arc_contains(const Arc& arc, const mpq_class& angle);

/// Points are `samples` uniform angles -1 + 2(k+1)/samples followed by
/// `extra_points`. Throws NotACover naming an uncovered angle.
Covering circle_covering(std::span<const Arc> arcs, std::size_t samples,
                         std::span<const mpq_class> extra_points, bool parallel = true);

/// alpha = (-1/2, 1), beta = (1/2, 5/4), gamma = (-1, 1/4): the three-arc
/// circle covering whose substitute is the boundary triangle.
std::vector<Arc> triangle_circle_arcs();

/// The same covering with beta = (1/2, 3/4); it misses the angle pi.
std::vector<Arc> short_beta_circle_arcs();

/// Boundary angles pi and -pi/2.
std::vector<mpq_class> triangle_circle_boundary_points();

std::string angle_label(const mpq_class& angle);

}  // namespace ddm
