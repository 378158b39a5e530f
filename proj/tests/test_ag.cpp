#include <doctest.h>

#include "support.hpp"
#include "surfalg/ag.hpp"
#include "surfalg/curves.hpp"
#include "surfalg/error.hpp"

using namespace surfalg;
using surfalg::test::fixture;

namespace {

DegreeMap cut_on(const QuiverWithFaces& q, std::initializer_list<const char*> labels) {
  DegreeMap d(q.num_arrows(), 0);
  for (const char* l : labels) d[*q.find_arrow(l)] = 1;
  return d;
}

GentlePresentation presentation(std::vector<std::string> vertices,
                                std::vector<GentlePresentation::PArrow> arrows,
                                std::vector<std::pair<int, int>> relations) {
  GentlePresentation p;
  p.vertex_labels = std::move(vertices);
  p.arrows = std::move(arrows);
  p.relations = std::move(relations);
  return p;
}

}  // namespace

TEST_CASE("thread walk on small algebras") {
  const auto kronecker = presentation({"1", "2"}, {{0, 1, "a"}, {0, 1, "b"}}, {});
  CHECK(ag_direct(kronecker) == AGInvariant{{{1, 1}, 2}});

  const auto a2 = presentation({"1", "2"}, {{0, 1, "a"}}, {});
  CHECK(ag_direct(a2) == AGInvariant{{{3, 1}, 1}});

  // A3 linear with its relation: derived equivalent to hereditary A3.
  const auto a3 = presentation({"1", "2", "3"}, {{0, 1, "a"}, {1, 2, "b"}}, {});
  const auto a3rel = presentation({"1", "2", "3"}, {{0, 1, "a"}, {1, 2, "b"}}, {{0, 1}});
  CHECK(ag_direct(a3) == AGInvariant{{{4, 2}, 1}});
  CHECK(ag_direct(a3rel) == ag_direct(a3));

  const auto triangle = presentation({"1", "2", "3"}, {{0, 1, "a"}, {1, 2, "b"}, {2, 0, "c"}}, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(ag_direct(triangle).count({0, 3}) == 1);

  const auto loop = presentation({"1", "2"}, {{0, 1, "a"}, {1, 0, "b"}}, {});
  CHECK_THROWS_AS(ag_direct(loop), Error);
  const auto star = presentation({"0", "1", "2", "3"}, {{0, 1, "a"}, {0, 2, "b"}, {0, 3, "c"}}, {});
  CHECK_THROWS_AS(ag_direct(star), Error);
}

TEST_CASE("three routes on fixture A") {
  const Triangulation t = fixture("fixtureA");
  const QuiverWithFaces q = quiver_of(t);
  const DegreeMap zero(q.num_arrows(), 0);
  const AGInvariant expected{{{1, 1}, 2}};
  CHECK(local_cuts(t, q, zero) == std::vector<int>{0, 0});
  CHECK(ag_formula(t, q, zero) == expected);
  CHECK(ag_direct(surface_algebra_presentation(q, zero)) == expected);
  CHECK(ag_weights(t, {0, 0}) == expected);
}

TEST_CASE("three routes on fixture B") {
  const Triangulation t = fixture("fixtureB");
  const QuiverWithFaces q = quiver_of(t);
  const DegreeMap d0 = cut_on(q, {"6>2#1", "1>7#1"});
  const DegreeMap d1 = cut_on(q, {"3>6#1", "7>5#1"});
  const DegreeMap d2 = cut_on(q, {"2>3#1", "1>7#1"});
  const AGInvariant ag0{{{1, 1}, 1}, {{3, 5}, 1}, {{2, 2}, 1}};
  CHECK(ag_formula(t, q, d0) == ag0);
  CHECK(ag_direct(surface_algebra_presentation(q, d0)) == ag0);
  CHECK(ag_weights(t, {0, 2, 0}) == ag0);
  CHECK(ag_formula(t, q, d2) == AGInvariant{{{2, 3}, 2}, {{2, 2}, 1}});
  CHECK(ag_weights(t, {0, 0, 2}) == AGInvariant{{{1, 1}, 2}, {{4, 6}, 1}});
  CHECK(ag_formula(t, q, d1) == ag_weights(t, {0, 0, 2}));

  const std::vector<int> l0 = local_cuts(t, q, d0), l2 = local_cuts(t, q, d2);
  const std::vector<int> chi = t.boundary_statistics().chi;
  CHECK(l0[0] + l0[1] + l0[2] == 2);
  for (int i = 0; i < 3; ++i) {
    CHECK(l0[i] - chi[i] == std::vector<int>{0, 2, 0}[i]);
    CHECK(l2[i] - chi[i] == std::vector<int>{1, 1, 0}[i]);
  }
  CHECK_THROWS_AS(local_cuts(t, q, DegreeMap(q.num_arrows(), 0)), Error);
}

TEST_CASE("three routes agree on every cut of the fixtures") {
  for (const char* name : {"fixtureA", "fixtureB", "fixtureC"}) {
    const Triangulation t = fixture(name);
    const QuiverWithFaces q = quiver_of(t);
    const BoundaryStatistics st = t.boundary_statistics();
    for (const DegreeMap& d : enumerate_admissible_cuts(q)) {
      const AGInvariant f = ag_formula(t, q, d);
      CHECK(ag_direct(surface_algebra_presentation(q, d)) == f);
      CHECK(ag_weights(t, boundary_weight(t, q, d)) == f);
      const std::vector<int> l = local_cuts(t, q, d);
      const std::vector<long long> w = boundary_weight(t, q, d);
      for (std::size_t i = 0; i < l.size(); ++i) CHECK(l[i] - st.chi[i] == w[i]);
    }
  }
  const Triangulation d = fixture("fixtureD");
  CHECK_THROWS_AS(ag_weights(d, {0}), Error);
}
