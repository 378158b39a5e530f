#include <doctest.h>

#include <numeric>

#include "support.hpp"
#include "surfalg/curves.hpp"
#include "surfalg/equivalence.hpp"
#include "surfalg/error.hpp"
#include "surfalg/generate.hpp"
#include "surfalg/mutation.hpp"

using namespace surfalg;
using surfalg::test::fixture;

namespace {

bool same_with_faces(const QuiverWithFaces& a, const QuiverWithFaces& b) {
  std::vector<int> identity(a.num_vertices());
  std::iota(identity.begin(), identity.end(), 0);
  bool found = false;
  for_each_complex_isomorphism(a, b, [&](const ComplexIso&) {
    found = true;
    return false;
  }, &identity);
  return found;
}

DegreeMap cut_on(const QuiverWithFaces& q, std::initializer_list<const char*> labels) {
  DegreeMap d(q.num_arrows(), 0);
  for (const char* l : labels) d[*q.find_arrow(l)] = 1;
  return d;
}

}  // namespace

TEST_CASE("mutation of the Kronecker quiver reverses both arrows") {
  const QuiverWithFaces q = quiver_of(fixture("fixtureA"));
  const QuiverWithFaces m = mutate_qp(q, 0);
  REQUIRE(m.num_arrows() == 2);
  CHECK(m.num_faces() == 0);
  for (const Arrow& a : m.arrows) {
    CHECK(a.source == 1);
    CHECK(a.target == 0);
  }
  CHECK_THROWS_AS(mutate_qp(q, 5), Error);
}

TEST_CASE("mutation at a sink with one arrow") {
  QuiverWithFaces q;
  q.vertex_labels = {"x", "y"};
  q.arrows = {{0, 1, -1, -1, {}}};
  assign_arrow_labels(q);
  const QuiverWithFaces m = mutate_qp(q, 1);
  REQUIRE(m.num_arrows() == 1);
  CHECK(m.arrows[0].source == 1);
  CHECK(m.arrows[0].target == 0);
}

TEST_CASE("flip and quiver mutation agree on the fixtures") {
  for (const char* name : {"fixtureA", "fixtureB", "fixtureC", "fixtureD"}) {
    const Triangulation t = fixture(name);
    const QuiverWithFaces q = quiver_of(t);
    for (int i = 0; i < t.num_arcs(); ++i) {
      CHECK(same_with_faces(mutate_qp(q, i), quiver_of(t.flip(i))));
      CHECK(same_with_faces(mutate_qp(mutate_qp(q, i), i), q));
    }
  }
}

TEST_CASE("flip and quiver mutation agree on random triangulations") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 30; ++k) {
    const SurfaceShape s = random_shape(rng, 2, 3, 6);
    const Triangulation t = random_flips(polygon_triangulation(s.genus, s.points), 10, rng);
    const int i = std::uniform_int_distribution<int>(0, t.num_arcs() - 1)(rng);
    CHECK(same_with_faces(mutate_qp(quiver_of(t), i), quiver_of(t.flip(i))));
  }
}

TEST_CASE("left graded mutation") {
  const Triangulation b = fixture("fixtureB");
  const QuiverWithFaces q = quiver_of(b);
  const DegreeMap d0 = cut_on(q, {"6>2#1", "1>7#1"});
  const GradedTriangulation m = graded_mutate({b, d0}, b.arc_index("2"), MutationSide::Left);
  const QuiverWithFaces qm = quiver_of(m.triangulation);
  CHECK(is_one_degree(qm, m.degree));
  CHECK(boundary_weight(m.triangulation, qm, m.degree) == std::vector<long long>{0, 2, 0});

  // Arrow 2 -> 3 leaves the mutated arc with degree 0, so its reverse gets 0.
  const DegreeMap d1 = cut_on(q, {"3>6#1", "7>5#1"});
  const GradedTriangulation m1 = graded_mutate({b, d1}, b.arc_index("2"), MutationSide::Left);
  const QuiverWithFaces q1 = quiver_of(m1.triangulation);
  CHECK(m1.degree[*q1.find_arrow("3>2#1")] == 0);

  const DegreeMap d2 = cut_on(q, {"2>3#1", "1>7#1"});
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    GradedTriangulation gt{b, d2};
    const int len = std::uniform_int_distribution<int>(1, 10)(rng);
    for (int k = 0; k < len; ++k) {
      gt = graded_mutate(gt, std::uniform_int_distribution<int>(0, 6)(rng), MutationSide::Left);
      const QuiverWithFaces qg = quiver_of(gt.triangulation);
      CHECK(is_one_degree(qg, gt.degree));
      CHECK(boundary_weight(gt.triangulation, qg, gt.degree) == std::vector<long long>{1, 1, 0});
    }
  }
  CHECK_THROWS_AS(graded_mutate({b, d2}, 9, MutationSide::Left), Error);
}

TEST_CASE("right graded mutation is measured, not assumed") {
  std::mt19937_64 rng(29);
  int weight_kept = 0, round_trips = 0, total = 0;
  for (int k = 0; k < 40; ++k) {
    const SurfaceShape s = random_shape(rng, 1, 3, 6);
    const Triangulation t = random_flips(polygon_triangulation(s.genus, s.points), 8, rng);
    const QuiverWithFaces q = quiver_of(t);
    const auto cuts = enumerate_admissible_cuts(q);
    const DegreeMap d = cuts[rng() % cuts.size()];
    const int i = std::uniform_int_distribution<int>(0, t.num_arcs() - 1)(rng);
    const GradedTriangulation r = graded_mutate({t, d}, i, MutationSide::Right);
    const QuiverWithFaces qr = quiver_of(r.triangulation);
    CHECK(is_one_degree(qr, r.degree));
    weight_kept += boundary_weight(r.triangulation, qr, r.degree) == boundary_weight(t, q, d) ? 1 : 0;
    const GradedTriangulation back = graded_mutate(graded_mutate({t, d}, i, MutationSide::Left), i,
                                                   MutationSide::Right);
    const QuiverWithFaces qb = quiver_of(back.triangulation);
    std::vector<int> identity(q.num_vertices());
    std::iota(identity.begin(), identity.end(), 0);
    bool shifted = false;
    for_each_complex_isomorphism(q, qb, [&](const ComplexIso& iso) {
      DegreeMap pulled(q.num_arrows());
      for (int a = 0; a < q.num_arrows(); ++a) pulled[a] = back.degree[iso.arrow_map[a]];
      shifted = coboundary_witness(q, d, pulled).has_value();
      return !shifted;
    }, &identity);
    round_trips += shifted ? 1 : 0;
    ++total;
  }
  MESSAGE("right mutation kept the boundary weight in " << weight_kept << "/" << total << " cases");
  MESSAGE("right after left at the same arc returned a shifted grading in " << round_trips << "/" << total
                                                                             << " cases");
}

TEST_CASE("flip paths") {
  const Triangulation b = fixture("fixtureB");
  const auto same = flip_path(b, b, 0);
  REQUIRE(same);
  CHECK(same->arcs.empty());

  for (int i = 0; i < b.num_arcs(); ++i) {
    const Triangulation f = b.flip(i);
    const auto one = flip_path(b, f, 1);
    REQUIRE(one);
    if (isomorphic(f, b))
      CHECK(one->arcs.empty());
    else
      CHECK(one->arcs == std::vector<std::string>{b.arc_label(i)});
  }

  const Triangulation c = fixture("fixtureC");
  const auto path = flip_path(b, c, 8);
  REQUIRE(path);
  Triangulation walked = b;
  for (const auto& label : path->arcs) walked = walked.flip(walked.arc_index(label));
  CHECK(isomorphic(walked, c));
  MESSAGE("fixtureB to fixtureC in " << path->arcs.size() << " flips");

  CHECK_THROWS_AS(flip_path(b, fixture("fixtureA"), 3), Error);
}
