#include "ddm/coarse_graining.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "ddm/error.hpp"
#include "ddm/kernels.hpp"

namespace ddm {

Substitute trace_substitute(const Covering& covering) {
  const std::size_t points = covering.traces.size();
  if (covering.point_labels.size() != points) {
    throw Error(ErrorCode::InvalidArgument, "covering has mismatched point labels");
  }
  std::map<PointSet, std::size_t> ids;
  std::vector<PointSet> classes;
  std::vector<std::size_t> class_of(points);
  for (std::size_t x = 0; x < points; ++x) {
    const auto& trace = covering.traces[x];
    if (trace.size() != covering.cover_labels.size()) {
      throw Error(ErrorCode::InvalidArgument, "trace width differs from the number of cover sets");
    }
    if (trace.none()) {
      throw Error(ErrorCode::UncoveredPoint, "point " + covering.point_labels[x] + " lies in no cover set");
    }
    auto [it, inserted] = ids.emplace(trace, classes.size());
    if (inserted) classes.push_back(trace);
    class_of[x] = it->second;
  }
  const std::size_t k = classes.size();
  std::vector<std::string> labels;
  std::vector<PointSet> min_open(k, PointSet(k));
  for (std::size_t t = 0; t < k; ++t) {
    std::string label = "{";
    for (auto s = classes[t].find_first(); s != PointSet::npos; s = classes[t].find_next(s)) {
      if (label.size() > 1) label += ',';
      label += covering.cover_labels[s];
    }
    labels.push_back(label + "}");
    for (std::size_t u = 0; u < k; ++u) {
      if (classes[t].is_subset_of(classes[u])) min_open[t].set(u);
    }
  }
  return {FiniteSpace(std::move(labels), std::move(min_open)), std::move(class_of)};
}

namespace {

const Simplex& require_simplex(const SimplicialComplex& p, const Simplex& sigma) {
  if (!p.contains(sigma)) {
    std::string text;
    for (auto v : sigma) text += (text.empty() ? "" : ",") + std::to_string(v);
    throw Error(ErrorCode::NotASimplex, "{" + text + "} is not a simplex of the complex");
  }
  return sigma;
}

PointSet as_bits(const Simplex& s, std::size_t width) {
  PointSet bits(width);
  for (auto v : s) bits.set(v);
  return bits;
}

std::vector<PointSet> simplex_bits(const SimplicialComplex& p) {
  std::vector<PointSet> out;
  for (const auto& s : p.simplices()) out.push_back(as_bits(s, p.vertex_count()));
  return out;
}

}  // namespace

std::vector<Simplex> star(const SimplicialComplex& p, const Simplex& sigma) {
  require_simplex(p, sigma);
  std::vector<Simplex> out;
  for (const auto& tau : p.simplices()) {
    if (is_face(sigma, tau)) out.push_back(tau);
  }
  return out;
}

std::vector<std::string> local_interiors(const SimplicialComplex& p) {
  std::vector<std::string> out;
  for (const auto& s : p.simplices()) out.push_back(p.label(s));
  return out;
}

Covering simplicial_covering(const SimplicialComplex& p) {
  Covering c;
  for (const auto& s : p.simplices()) {
    c.cover_labels.push_back("St(" + p.label(s) + ")");
    c.point_labels.push_back("I(" + p.label(s) + ")");
  }
  auto bits = simplex_bits(p);
  c.traces = kernels::star_traces_serial(bits, bits);
  return c;
}

FiniteSpace simplicial_substitute(const SimplicialComplex& p) {
  Substitute sub = trace_substitute(simplicial_covering(p));
  std::vector<std::string> labels(sub.space.size());
  for (std::size_t cell = 0; cell < p.size(); ++cell) labels[sub.class_of[cell]] = p.label(p.simplices()[cell]);
  return sub.space.relabeled(std::move(labels));
}

std::vector<std::vector<mpq_class>> realize(const SimplicialComplex& p) {
  const std::size_t n = p.vertex_count();
  std::vector<std::vector<mpq_class>> placement(n, std::vector<mpq_class>(n, 0));
  for (std::size_t v = 0; v < n; ++v) placement[v][v] = 1;
  return placement;
}

SamplePoint make_sample_point(const SimplicialComplex& p, Simplex carrier, std::vector<mpq_class> weights) {
  require_simplex(p, carrier);
  if (weights.size() != carrier.size()) {
    throw Error(ErrorCode::InvalidArgument, "one barycentric weight per carrier vertex required");
  }
  mpq_class total = 0;
  for (const auto& w : weights) {
    if (sgn(w) <= 0) throw Error(ErrorCode::InvalidArgument, "barycentric weights must be positive");
    total += w;
  }
  if (total != 1) throw Error(ErrorCode::InvalidArgument, "barycentric weights must sum to 1");
  const auto placement = realize(p);
  std::vector<mpq_class> ambient(p.vertex_count(), 0);
  for (std::size_t k = 0; k < carrier.size(); ++k) {
    const auto& corner = placement[carrier[k]];
    for (std::size_t axis = 0; axis < ambient.size(); ++axis) ambient[axis] += weights[k] * corner[axis];
  }
  return {std::move(carrier), std::move(weights), std::move(ambient)};
}

std::vector<SamplePoint> sample(const SimplicialComplex& p, const Simplex& sigma, std::uint64_t seed,
                                std::size_t count) {
  require_simplex(p, sigma);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<long> draw(1, 1024);
  std::vector<SamplePoint> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<mpq_class> weights;
    mpq_class total = 0;
    for (std::size_t v = 0; v < sigma.size(); ++v) {
      weights.emplace_back(draw(rng));
      total += weights.back();
    }
    for (auto& w : weights) {
      w /= total;
      w.canonicalize();
    }
    out.push_back(make_sample_point(p, sigma, std::move(weights)));
  }
  return out;
}

PointSet support_of(std::span<const mpq_class> ambient) {
  PointSet support(ambient.size());
  for (std::size_t axis = 0; axis < ambient.size(); ++axis) {
    if (sgn(ambient[axis]) != 0) support.set(axis);
  }
  return support;
}

std::uint64_t cell_seed(std::uint64_t seed, std::size_t cell) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(cell) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

FiniteSpace sampled_substitute(const SimplicialComplex& p, std::size_t per_cell, std::uint64_t seed,
                               bool parallel) {
  if (per_cell == 0) throw Error(ErrorCode::InvalidArgument, "per_cell must be at least 1");
  auto points = parallel ? kernels::sample_cells_parallel(p, per_cell, seed)
                         : kernels::sample_cells_serial(p, per_cell, seed);
  std::vector<PointSet> supports;
  supports.reserve(points.size());
  for (const auto& pt : points) supports.push_back(support_of(pt.ambient));

  Covering c;
  for (const auto& s : p.simplices()) c.cover_labels.push_back("St(" + p.label(s) + ")");
  for (std::size_t k = 0; k < points.size(); ++k) {
    c.point_labels.push_back(p.label(points[k].carrier) + "#" + std::to_string(k % per_cell));
  }
  auto faces = simplex_bits(p);
  c.traces = parallel ? kernels::star_traces_parallel(supports, faces)
                      : kernels::star_traces_serial(supports, faces);

  Substitute sub = trace_substitute(c);
  std::vector<std::string> labels(sub.space.size());
  std::vector<bool> named(sub.space.size(), false);
  for (std::size_t k = 0; k < points.size(); ++k) {
    std::size_t cls = sub.class_of[k];
    if (!named[cls]) {
      labels[cls] = p.label(points[k].carrier);
      named[cls] = true;
    }
  }
  return sub.space.relabeled(std::move(labels));
}

mpq_class normalize_angle(mpq_class angle) {
  // Shift by whole turns (2 in units of pi) into (-1, 1].
  mpq_class turns = (angle + 1) / 2;
  mpz_class whole;
  mpz_fdiv_q(whole.get_mpz_t(), turns.get_num_mpz_t(), turns.get_den_mpz_t());
  angle -= 2 * mpq_class(whole);
  if (angle <= -1) angle += 2;
  angle.canonicalize();
  return angle;
}

bool arc_contains(const Arc& arc, const mpq_class& angle) {
  if (arc.hi - arc.lo > 2) return true;
  // Shift the arc's low end into (-1, 1]; the arc then lives in (-1, 3).
  mpq_class lo = normalize_angle(arc.lo);
  mpq_class hi = lo + (arc.hi - arc.lo);
  mpq_class phi = normalize_angle(angle);
  if (phi <= lo) phi += 2;
  return lo < phi && phi < hi;
}

std::string angle_label(const mpq_class& angle) {
  return "phi=" + angle.get_str() + "pi";
}

Covering circle_covering(std::span<const Arc> arcs, std::size_t samples,
                         std::span<const mpq_class> extra_points, bool parallel) {
  if (arcs.empty()) throw Error(ErrorCode::InvalidArgument, "no arcs given");
  for (const auto& a : arcs) {
    if (a.lo >= a.hi) throw Error(ErrorCode::InvalidArgument, "arc " + a.label + " is empty");
  }
  std::vector<mpq_class> angles;
  angles.reserve(samples + extra_points.size());
  for (std::size_t k = 0; k < samples; ++k) {
    mpq_class phi(static_cast<long>(2 * (k + 1)), static_cast<long>(samples));
    phi -= 1;
    phi.canonicalize();
    angles.push_back(std::move(phi));
  }
  for (const auto& e : extra_points) angles.push_back(normalize_angle(e));

  Covering c;
  for (const auto& a : arcs) c.cover_labels.push_back(a.label);
  for (const auto& phi : angles) c.point_labels.push_back(angle_label(phi));
  c.traces = parallel ? kernels::arc_traces_parallel(angles, arcs) : kernels::arc_traces_serial(angles, arcs);
  for (std::size_t k = 0; k < angles.size(); ++k) {
    if (c.traces[k].none()) {
      throw Error(ErrorCode::NotACover, "arcs do not cover " + angle_label(angles[k]));
    }
  }
  return c;
}

std::vector<Arc> triangle_circle_arcs() {
  return {{"alpha", mpq_class(-1, 2), mpq_class(1)},
          {"beta", mpq_class(1, 2), mpq_class(5, 4)},
          {"gamma", mpq_class(-1), mpq_class(1, 4)}};
}

std::vector<Arc> short_beta_circle_arcs() {
  auto arcs = triangle_circle_arcs();
  arcs[1].hi = mpq_class(3, 4);
  return arcs;
}

std::vector<mpq_class> triangle_circle_boundary_points() {
  return {mpq_class(1), mpq_class(-1, 2)};
}

}  // namespace ddm
