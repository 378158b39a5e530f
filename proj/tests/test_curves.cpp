#include <doctest.h>

#include <map>

#include "support.hpp"
#include "surfalg/curves.hpp"
#include "surfalg/error.hpp"

using namespace surfalg;
using surfalg::test::fixture;

namespace {

CurveClass combination(const QuiverWithFaces& q, std::map<std::string, int> coeffs) {
  CurveClass c(q.num_arrows(), 0);
  for (const auto& [label, k] : coeffs) c[*q.find_arrow(label)] = k;
  return c;
}

DegreeMap cut_on(const QuiverWithFaces& q, std::initializer_list<const char*> labels) {
  DegreeMap d(q.num_arrows(), 0);
  for (const char* l : labels) d[*q.find_arrow(l)] = 1;
  return d;
}

// Walk just inside boundary component i through the fans of its points.
// Only meaningful when no arc is boundary-homotopic.
CurveWord boundary_word(const Triangulation& t, int i) {
  CurveWord w;
  for (int p : t.surface().components[i].points) {
    const auto& fan = t.fan(p);
    for (std::size_t j = 1; j < fan.size(); ++j) {
      const int tri = fan[j] / 3, v = fan[j] % 3;
      if (j + 1 < fan.size())
        w.push_back({tri, (v + 2) % 3, v});
      else
        w.push_back({tri, (v + 2) % 3, (v + 1) % 3});
    }
  }
  // Start with the traversal of the first point's first corner.
  std::rotate(w.rbegin(), w.rbegin() + 1, w.rend());
  return w;
}

bool in_kernel(const QuiverWithFaces& q, const CurveClass& c) {
  std::vector<long long> sum(q.num_vertices(), 0);
  for (int a = 0; a < q.num_arrows(); ++a) {
    sum[q.arrows[a].target] += c[a];
    sum[q.arrows[a].source] -= c[a];
  }
  return std::all_of(sum.begin(), sum.end(), [](long long x) { return x == 0; });
}

}  // namespace

TEST_CASE("boundary classes of fixture B") {
  const Triangulation t = fixture("fixtureB");
  const QuiverWithFaces q = quiver_of(t);
  CHECK(boundary_curve_class(t, q, 0) ==
        combination(q, {{"2>3#1", 1}, {"3>4#1", 1}, {"4>5#1", 1}, {"5>1#1", 1}, {"2>1#1", -1}}));
  CHECK(boundary_curve_class(t, q, 1) == combination(q, {{"6>2#1", 1}, {"2>1#1", 1}, {"1>7#1", 1}, {"6>7#1", -1}}));
  CHECK(boundary_curve_class(t, q, 2) ==
        combination(q, {{"6>7#1", 1}, {"3>6#1", 1}, {"3>4#1", -1}, {"4>5#1", -1}, {"7>5#1", 1}}));
}

TEST_CASE("boundary classes agree with boundary words and lie in the kernel") {
  for (const char* name : {"fixtureA", "fixtureB"}) {
    const Triangulation t = fixture(name);
    const QuiverWithFaces q = quiver_of(t);
    for (int i = 0; i < t.surface().num_components(); ++i) {
      const CurveWord w = boundary_word(t, i);
      const CurveClass c = boundary_curve_class(t, q, i);
      CHECK(curve_class_of_word(t, q, w) == c);
      CHECK(in_kernel(q, c));
      CurveClass neg = c;
      for (int& x : neg) x = -x;
      CHECK(curve_class_of_word(t, q, reversed(w)) == neg);
    }
  }
  const Triangulation c = fixture("fixtureC");
  const QuiverWithFaces qc = quiver_of(c);
  for (int i = 0; i < 3; ++i) CHECK(in_kernel(qc, boundary_curve_class(c, qc, i)));
}

TEST_CASE("curve words") {
  const Triangulation t = fixture("fixtureB");
  const QuiverWithFaces q = quiver_of(t);
  CHECK(curve_class_of_word(t, q, {}) == CurveClass(q.num_arrows(), 0));
  CHECK_THROWS_AS(curve_class_of_word(t, q, {{0, 1, 1}}), Error);
  CHECK_THROWS_AS(curve_class_of_word(t, q, {{0, 0, 1}, {0, 0, 1}}), Error);
  CHECK_THROWS_AS(curve_class_of_word(t, q, {{1, 0, 1}}), Error);
  try {
    curve_class_of_word(t, q, {{0, 0, 1}, {0, 0, 1}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidWord);
  }
}

TEST_CASE("weights of the named fixture cuts") {
  const Triangulation b = fixture("fixtureB");
  const QuiverWithFaces qb = quiver_of(b);
  const GeneratorSystem eps = generator_system(b, qb);
  using W = std::vector<long long>;
  CHECK(weight(b, qb, cut_on(qb, {"6>2#1", "1>7#1"}), eps) == W{0, 2, 0});
  CHECK(weight(b, qb, cut_on(qb, {"3>6#1", "7>5#1"}), eps) == W{0, 0, 2});
  CHECK(weight(b, qb, cut_on(qb, {"2>3#1", "1>7#1"}), eps) == W{1, 1, 0});
  CHECK(weight(b, qb, cut_on(qb, {"2>3#1", "5>1#1"}), eps) == W{2, 0, 0});

  const Triangulation c = fixture("fixtureC");
  const QuiverWithFaces qc = quiver_of(c);
  CHECK(boundary_weight(c, qc, cut_on(qc, {"3>7#1", "3>5#1", "1>7#1"})) == W{1, 1, 0});
  CHECK(boundary_weight(c, qc, cut_on(qc, {"4>3#1", "3>7#1", "7>5#1"})) == W{0, 0, 2});

  for (const auto& d : enumerate_admissible_cuts(qc)) {
    const W w = boundary_weight(c, qc, d);
    CHECK(w[0] + w[1] + w[2] == 2);
  }

  CHECK_THROWS_AS(weight(b, qb, DegreeMap(qb.num_arrows(), 0), eps), Error);
  CHECK_THROWS_AS(weight(b, qb, cut_on(qb, {"6>2#1", "1>7#1"}), GeneratorSystem{}), Error);
  const Triangulation d = fixture("fixtureD");
  CHECK_THROWS_AS(boundary_weight(d, quiver_of(d), {}), Error);
  CHECK_THROWS_AS(generator_system(b, qb, {CurveWord{}}), Error);
}

TEST_CASE("coboundary witness") {
  const Triangulation b = fixture("fixtureB");
  const QuiverWithFaces q = quiver_of(b);
  const DegreeMap d0 = cut_on(q, {"6>2#1", "1>7#1"});
  const DegreeMap d2 = cut_on(q, {"2>3#1", "1>7#1"});
  const DegreeMap d3 = cut_on(q, {"2>3#1", "5>1#1"});

  const auto same = coboundary_witness(q, d0, d0);
  REQUIRE(same);
  CHECK(std::all_of(same->begin(), same->end(), [](long long x) { return x == 0; }));
  CHECK_FALSE(coboundary_witness(q, d0, d3));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long long> r(q.num_vertices());
    for (auto& x : r) x = static_cast<long long>(rng() % 11) - 5;
    const DegreeMap shifted = add_coboundary(q, d2, r);
    CHECK(is_one_degree(q, shifted));
    const auto w = coboundary_witness(q, shifted, d2);
    REQUIRE(w);
    CHECK(add_coboundary(q, d2, *w) == shifted);
  }
  CHECK_THROWS_AS(coboundary_witness(q, d0, DegreeMap{}), Error);
}
