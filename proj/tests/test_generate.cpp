#include <doctest.h>

#include "support.hpp"
#include "surfalg/curves.hpp"
#include "surfalg/generate.hpp"

using namespace surfalg;

namespace {

int internal_count(const Triangulation& t) {
  int n = 0;
  for (int i = 0; i < t.num_triangles(); ++i) n += t.is_internal(i) ? 1 : 0;
  return n;
}

int isolated_count(const Triangulation& t) {
  int n = 0;
  for (int p = 0; p < t.num_points(); ++p) n += t.is_isolated(p) ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("polygon triangulations realise the requested surface") {
  const std::vector<std::pair<int, std::vector<int>>> shapes{
      {0, {1, 1}}, {0, {2, 3}}, {0, {1, 1, 2}}, {1, {1}}, {1, {2, 1}}, {2, {1}}, {2, {1, 2, 1}}, {0, {1, 1, 1}}};
  for (const auto& [g, points] : shapes) {
    const Triangulation t = polygon_triangulation(g, points);
    CHECK(t.surface().genus == g);
    CHECK(t.surface().num_components() == static_cast<int>(points.size()));
    auto got = t.surface().points_per_component;
    auto want = points;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("random shapes and flips stay valid") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 40; ++k) {
    const SurfaceShape s = random_shape(rng, 2, 3, 8);
    CHECK_FALSE((s.genus == 0 && s.points.size() == 1));
    const Triangulation t = random_flips(polygon_triangulation(s.genus, s.points), 15, rng);
    CHECK(t.surface().genus == s.genus);
    CHECK(h1_rank(boundary_complex(quiver_of(t))) == t.surface().first_betti_number());
  }
}

TEST_CASE("genus one, one boundary component has first homology of rank 2") {
  std::mt19937_64 rng(17);
  const Triangulation t = random_flips(polygon_triangulation(1, {1}), 12, rng);
  CHECK(h1_rank(boundary_complex(quiver_of(t))) == 2);
}

TEST_CASE("generator words complete the boundary classes to a basis of homology") {
  const std::vector<std::pair<int, std::vector<int>>> shapes{{1, {1}}, {1, {2, 1}}, {2, {1}}, {2, {2, 1, 1}}};
  for (const auto& [g, points] : shapes) {
    const Triangulation t = polygon_triangulation(g, points);
    const QuiverWithFaces q = quiver_of(t);
    const GeneratorSystem eps = generator_system(t, q, polygon_generator_words(g, points));
    const BoundaryComplex c = boundary_complex(q);
    IntMatrix lattice = c.d1;
    for (int a = 0; a < q.num_arrows(); ++a)
      for (const CurveClass& cl : eps.classes) lattice[a].push_back(cl[a]);
    const auto factors = invariant_factors(lattice);
    CHECK(static_cast<int>(factors.size()) == q.num_arrows() - integer_rank(c.d0));
    CHECK(std::all_of(factors.begin(), factors.end(), [](const BigInt& x) { return x == 1; }));
  }
}

TEST_CASE("disc triangulations") {
  const std::vector<std::size_t> catalan{1, 2, 5, 14, 42, 132};
  for (int p = 3; p <= 8; ++p) {
    const auto all = disc_triangulations(p);
    CHECK(all.size() == catalan[p - 3]);
    for (const Triangulation& t : all) {
      CHECK(t.surface().is_disc());
      if (p >= 4) CHECK(internal_count(t) + 2 == isolated_count(t));
    }
  }
  for (const Triangulation& t : disc_triangulations(5)) {
    CHECK(internal_count(t) == 0);
    CHECK(isolated_count(t) == 2);
  }
}
