#include <doctest.h>

#include <map>

#include "ddm/coarse_graining.hpp"
#include "ddm/correspondence.hpp"
#include "ddm/error.hpp"
#include "ddm/finite_space.hpp"
#include "support/support.hpp"

using namespace ddm;
using ddm::test::relation;

namespace {

using Labels = std::vector<std::string>;

SimplicialComplex complex_of(std::size_t n, std::vector<Simplex> simplices) {
  return SimplicialComplex::closure(VertexTable::numbered(n), std::move(simplices));
}

SimplicialComplex boundary_triangle() { return complex_of(3, {{0, 1}, {1, 2}, {0, 2}}); }
SimplicialComplex full_triangle() { return complex_of(3, {{0, 1, 2}}); }

Labels labels(const SimplicialComplex& p, const std::vector<Simplex>& simplices) {
  Labels out;
  for (const auto& s : simplices) out.push_back(p.label(s));
  return out;
}

Covering covering(Labels sets, std::vector<std::pair<std::string, Labels>> points) {
  Covering c;
  c.cover_labels = sets;
  for (auto& [p, in] : points) {
    PointSet t(sets.size());
    for (const auto& s : in) t.set(static_cast<std::size_t>(std::find(sets.begin(), sets.end(), s) - sets.begin()));
    c.point_labels.push_back(p);
    c.traces.push_back(t);
  }
  return c;
}

// Angles in units of pi/2048; arcs as open integer intervals; wrap-around by whole turns of 4096.
struct IntArc {
  long lo, hi;
};

bool int_contains(IntArc arc, long a) {
  for (long m = -3; m <= 3; ++m) {
    long x = a + 4096 * m;
    if (arc.lo < x && x < arc.hi) return true;
  }
  return false;
}

std::vector<std::vector<bool>> brute_circle_traces(const std::vector<IntArc>& arcs, const std::vector<long>& extra) {
  std::vector<long> angles;
  for (long k = 0; k < 4096; ++k) angles.push_back(k + 1 - 2048);
  angles.insert(angles.end(), extra.begin(), extra.end());
  std::vector<std::vector<bool>> out;
  for (long a : angles) {
    std::vector<bool> t;
    for (auto arc : arcs) t.push_back(int_contains(arc, a));
    out.push_back(t);
  }
  return out;
}

const std::vector<IntArc> kCorrectedArcs{{-1024, 2048}, {1024, 2560}, {-2048, 512}};

}  // namespace

TEST_CASE("trace substitute examples") {
  auto two = trace_substitute(covering({"A", "B"}, {{"p", {"A"}}, {"q", {"A", "B"}}}));
  CHECK(two.space.size() == 2);
  std::size_t p = two.class_of[0], q = two.class_of[1];
  CHECK(two.space.min_open(p).count() == 2);
  CHECK(two.space.min_open(p).test(q));
  CHECK(two.space.min_open(q).count() == 1);

  auto one = trace_substitute(covering({"A"}, {{"p", {"A"}}, {"q", {"A"}}, {"r", {"A"}}}));
  CHECK(one.space.size() == 1);

  try {
    trace_substitute(covering({"A"}, {{"p", {"A"}}, {"q", {}}}));
    FAIL("uncovered point accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UncoveredPoint);
  }
}

TEST_CASE("stars and local interiors") {
  auto tri = boundary_triangle();
  CHECK(labels(tri, star(tri, {0})) == Labels{"1", "12", "13"});
  CHECK(labels(tri, star(tri, {0, 1})) == Labels{"12"});
  CHECK(star(full_triangle(), {0}).size() == 4);
  CHECK_THROWS_AS(star(tri, {0, 1, 2}), Error);
  CHECK(local_interiors(tri).size() == tri.size());
}

TEST_CASE("simplicial substitute examples") {
  auto tri = simplicial_substitute(boundary_triangle());
  CHECK(tri.size() == 6);
  auto generated = generated_space(
      from_relation_network(relation(3, {{1, 2}, {2, 3}, {3, 1}}), VertexTable::numbered(3)));
  CHECK(poset_isomorphism(tri, generated).has_value());

  CHECK(simplicial_substitute(complex_of(1, {{0}})).size() == 1);

  auto segment = simplicial_substitute(complex_of(2, {{0, 1}}));
  CHECK(segment.size() == 3);
  auto edge = *segment.find("12");
  auto vertex = *segment.find("1");
  CHECK(segment.min_open(edge).count() == 1);
  CHECK(segment.min_open(vertex).count() == 2);
  CHECK(segment.min_open(vertex).test(edge));
}

TEST_CASE("simplicial covering is a base and orders by face inclusion") {
  test::Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = to_simplicial(test::random_finite_manifold(rng));
    auto c = simplicial_covering(p);
    // cover set sigma as a point set over cells
    std::vector<PointSet> sets(c.cover_labels.size(), PointSet(c.point_labels.size()));
    for (std::size_t x = 0; x < c.traces.size(); ++x)
      for (auto s = c.traces[x].find_first(); s != PointSet::npos; s = c.traces[x].find_next(s)) sets[s].set(x);
    std::set<PointSet> family(sets.begin(), sets.end());
    for (const auto& a : sets)
      for (const auto& b : sets) {
        auto meet = a & b;
        CHECK((meet.none() || family.count(meet) > 0));
      }
    auto s = simplicial_substitute(p);
    REQUIRE(s.size() == p.size());
    for (const auto& sigma : p.simplices())
      for (const auto& tau : p.simplices())
        CHECK(s.min_open(*s.find(p.label(sigma))).test(*s.find(p.label(tau))) == is_face(sigma, tau));
  }
}

TEST_CASE("realization and sampling") {
  auto p = boundary_triangle();
  auto placement = realize(p);
  CHECK(placement[1] == std::vector<mpq_class>{0, 1, 0});
  auto half = make_sample_point(p, {0, 1}, {mpq_class(1, 2), mpq_class(1, 2)});
  CHECK(support_of(half.ambient).count() == 2);
  CHECK_THROWS_AS(make_sample_point(p, {0, 1}, {mpq_class(1), mpq_class(0)}), Error);
  CHECK_THROWS_AS(make_sample_point(p, {0, 1}, {mpq_class(1, 2), mpq_class(1, 3)}), Error);

  for (const auto& sigma : p.simplices()) {
    auto points = sample(p, sigma, 99, 5);
    REQUIRE(points.size() == 5);
    for (const auto& x : points) {
      CHECK(x.carrier == sigma);
      mpq_class total = 0;
      for (const auto& b : x.barycentric) {
        CHECK(b > 0);
        total += b;
      }
      CHECK(total == 1);
      // lies in exactly one cell: the one whose vertex set is its support
      std::size_t cells = 0;
      for (const auto& tau : p.simplices()) {
        PointSet t(p.vertex_count());
        for (auto v : tau) t.set(v);
        cells += t == support_of(x.ambient);
      }
      CHECK(cells == 1);
      // membership law: in Int St(rho) iff rho is a face of the carrier
      for (const auto& rho : p.simplices()) {
        bool in_star = true;
        for (auto v : rho) in_star &= x.ambient[v] > 0;
        CHECK(in_star == is_face(rho, sigma));
      }
    }
    CHECK(sample(p, sigma, 99, 5)[0].barycentric == points[0].barycentric);
  }
}

TEST_CASE("sampled substitute is isomorphic to the symbolic one") {
  CHECK(poset_isomorphism(sampled_substitute(boundary_triangle(), 3, 1), simplicial_substitute(boundary_triangle())));
  auto full = sampled_substitute(full_triangle(), 5, 7);
  CHECK(full.size() == 7);
  CHECK(poset_isomorphism(full, simplicial_substitute(full_triangle())));
  test::Rng rng(42);
  std::uniform_int_distribution<std::uint64_t> seeds;
  for (int trial = 0; trial < 60; ++trial) {
    auto p = to_simplicial(test::random_finite_manifold(rng));
    if (p.size() > 40) continue;
    auto symbolic = simplicial_substitute(p);
    CHECK(poset_isomorphism(sampled_substitute(p, 1, seeds(rng)), symbolic).has_value());
    CHECK(poset_isomorphism(sampled_substitute(p, 4, seeds(rng), false), symbolic).has_value());
  }
}

TEST_CASE("circle covering matches the brute-force trace oracle") {
  auto arcs = triangle_circle_arcs();
  auto extra = triangle_circle_boundary_points();
  auto c = circle_covering(arcs, 4096, extra);
  auto brute = brute_circle_traces(kCorrectedArcs, {2048, -1024});
  REQUIRE(c.traces.size() == brute.size());
  for (std::size_t k = 0; k < brute.size(); ++k)
    for (std::size_t a = 0; a < 3; ++a) CHECK(c.traces[k].test(a) == brute[k][a]);
  std::set<std::vector<bool>> classes(brute.begin(), brute.end());
  CHECK(classes.size() == 6);

  auto sub = trace_substitute(c);
  CHECK(sub.space.size() == 6);
  auto generated = generated_space(
      from_relation_network(relation(3, {{1, 2}, {2, 3}, {3, 1}}), VertexTable::numbered(3)));
  CHECK(poset_isomorphism(sub.space, generated).has_value());
  Labels got = sub.space.labels();
  std::sort(got.begin(), got.end());
  CHECK(got == Labels{"{alpha,beta}", "{alpha,gamma}", "{alpha}", "{beta,gamma}", "{beta}", "{gamma}"});
}

TEST_CASE("circle covering edge cases") {
  try {
    circle_covering(short_beta_circle_arcs(), 4096, triangle_circle_boundary_points());
    FAIL("short beta accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotACover);
  }
  // the uncovered point is pi even with no extra points: 4096 samples include phi = 1
  CHECK_THROWS_AS(circle_covering(short_beta_circle_arcs(), 4096, {}), Error);

  std::vector<Arc> whole{{"all", mpq_class(-2), mpq_class(1)}};
  CHECK(trace_substitute(circle_covering(whole, 64, {})).space.size() == 1);

  std::vector<Arc> two{{"A", mpq_class(-1, 2), mpq_class(3, 2)}, {"B", mpq_class(1, 2), mpq_class(5, 2)}};
  auto c = circle_covering(two, 4096, {});
  auto brute = brute_circle_traces({{-1024, 3072}, {1024, 5120}}, {});
  std::set<std::vector<bool>> classes(brute.begin(), brute.end());
  CHECK(trace_substitute(c).space.size() == classes.size());
  CHECK(classes.size() == 3);

  CHECK(normalize_angle(mpq_class(3)) == 1);
  CHECK(normalize_angle(mpq_class(-1)) == 1);
  CHECK(normalize_angle(mpq_class(5, 2)) == mpq_class(1, 2));
  CHECK(arc_contains({"g", mpq_class(-1), mpq_class(1, 4)}, mpq_class(-1, 2)));
  CHECK_FALSE(arc_contains({"g", mpq_class(-1), mpq_class(1, 4)}, mpq_class(1)));
  CHECK(arc_contains({"b", mpq_class(1, 2), mpq_class(5, 4)}, mpq_class(-7, 8)));
}

TEST_CASE("adding a cover set never merges classes") {
  test::Rng rng(43);
  std::bernoulli_distribution coin(0.4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t points = 1 + trial % 12, sets = 1 + trial % 5;
    Covering c;
    for (std::size_t s = 0; s <= sets; ++s) c.cover_labels.push_back("V" + std::to_string(s));
    for (std::size_t x = 0; x < points; ++x) {
      PointSet t(sets + 1);
      t.set(0);
      for (std::size_t s = 1; s <= sets; ++s)
        if (coin(rng)) t.set(s);
      c.point_labels.push_back("x" + std::to_string(x));
      c.traces.push_back(t);
    }
    Covering smaller = c;
    smaller.cover_labels.pop_back();
    for (auto& t : smaller.traces) t.resize(sets);
    auto big = trace_substitute(c), small = trace_substitute(smaller);
    CHECK(big.space.size() >= small.space.size());
    CHECK(is_t0(big.space));
    for (std::size_t x = 0; x < points; ++x)
      for (std::size_t y = 0; y < points; ++y)
        if (big.class_of[x] == big.class_of[y]) CHECK(small.class_of[x] == small.class_of[y]);
  }
}

TEST_CASE("correspondence on the triangle is the identity") {
  auto m = from_relation_network(relation(3, {{1, 2}, {2, 3}, {3, 1}}), VertexTable::numbered(3));
  auto report = verify_correspondence(m, 3, 1);
  REQUIRE(report.isomorphic());
  for (std::size_t k = 0; k < report.generated.size(); ++k) {
    CHECK(report.simplicial.label((*report.generated_to_simplicial)[k]) == report.generated.label(k));
    CHECK(report.sampled.label((*report.generated_to_sampled)[k]) == report.generated.label(k));
  }
  CHECK(verify_correspondence(test::family(1, {"1"}), 3, 1).isomorphic());
  CHECK_THROWS_AS(verify_correspondence(test::family(2, {"1", "2", "12", "21"}), 3, 1), Error);
}
