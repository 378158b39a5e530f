#include <doctest.h>

#include "support.hpp"
#include "surfalg/error.hpp"

using namespace surfalg;
using surfalg::test::fixture;

namespace {

ErrorKind kind_of(const std::vector<TriangleSpec>& specs, std::string* label = nullptr) {
  try {
    Triangulation t(specs);
  } catch (const Error& e) {
    if (label) *label = e.label();
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Malformed;
}

int count_class(const Triangulation& t, TriangleClass c) {
  int n = 0;
  for (int i = 0; i < t.num_triangles(); ++i) n += t.classify(i) == c ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("surface invariants of the fixtures") {
  const Triangulation a = fixture("fixtureA");
  CHECK(a.num_triangles() == 2);
  CHECK(a.surface().genus == 0);
  CHECK(a.surface().points_per_component == std::vector<int>{1, 1});

  const Triangulation b = fixture("fixtureB");
  CHECK(b.num_arcs() == 7);
  CHECK(b.num_triangles() == 6);
  CHECK(b.surface().genus == 0);
  CHECK(b.surface().points_per_component == std::vector<int>{1, 1, 2});
  CHECK(b.surface().euler_characteristic == -1);

  const Triangulation c = fixture("fixtureC");
  CHECK(same_surface(b.surface(), c.surface()));
  CHECK(c.surface().points_per_component == std::vector<int>{1, 1, 2});

  const Triangulation d = fixture("fixtureD");
  CHECK(d.surface().is_disc());
  CHECK(d.surface().points_per_component == std::vector<int>{5});
}

TEST_CASE("validation errors name the label") {
  auto specs = find_fixture("fixtureB")->triangles;
  std::string label;

  auto dup = specs;
  dup[1][0] = SideSpec::arc("3", 1);
  CHECK(kind_of(dup, &label) == ErrorKind::DuplicateArcUse);
  CHECK(label == "3");

  auto lonely = specs;
  lonely[1][1] = SideSpec::arc("9", 1);
  CHECK(kind_of(lonely, &label) == ErrorKind::UnglueableSide);
  CHECK(label == "9");

  auto twisted = specs;
  twisted[5][0].dir = 1;
  CHECK(kind_of(twisted, &label) == ErrorKind::NonOrientableGluing);
  CHECK(label == "1");

  auto seg = specs;
  seg[2][1] = SideSpec::segment("b3a");
  CHECK(kind_of(seg, &label) == ErrorKind::DuplicateSegmentUse);

  auto two = find_fixture("fixtureA")->triangles;
  auto more = find_fixture("fixtureD")->triangles;
  two.insert(two.end(), more.begin(), more.end());
  CHECK(kind_of(two) == ErrorKind::Disconnected);

  // Two triangles glued along all three sides: a sphere, every vertex interior.
  std::vector<TriangleSpec> sphere{{SideSpec::arc("x", 1), SideSpec::arc("y", 1), SideSpec::arc("z", 1)},
                                   {SideSpec::arc("z", -1), SideSpec::arc("y", -1), SideSpec::arc("x", -1)}};
  CHECK(kind_of(sphere) == ErrorKind::InteriorVertex);

  std::vector<TriangleSpec> bad_dir{{SideSpec::arc("x", 2), SideSpec::segment("s"), SideSpec::segment("t")}};
  CHECK(kind_of(bad_dir) == ErrorKind::Malformed);
  CHECK(kind_of({}) == ErrorKind::Malformed);
}

TEST_CASE("triangle classes") {
  const Triangulation a = fixture("fixtureA");
  CHECK(a.classify(0) == TriangleClass::BasedOnBoundary);
  CHECK(a.classify(1) == TriangleClass::BasedOnBoundary);

  const Triangulation b = fixture("fixtureB");
  CHECK(b.classify(0) == TriangleClass::Uncontractible);  // sides 3, 6, 2
  CHECK(count_class(b, TriangleClass::Uncontractible) == b.surface().uncontractible_count());
  CHECK(count_class(b, TriangleClass::Uncontractible) == 2);

  const Triangulation c = fixture("fixtureC");
  CHECK(count_class(c, TriangleClass::Uncontractible) == 2);
  CHECK(c.classify(3) == TriangleClass::HomotopicToBoundary);

  const Triangulation d = fixture("fixtureD");
  CHECK(count_class(d, TriangleClass::HomotopicToBoundary) == 3);
}

TEST_CASE("boundary-homotopic arcs") {
  const Triangulation a = fixture("fixtureA");
  CHECK_FALSE(a.is_boundary_homotopic(a.arc_index("1")));

  const Triangulation b = fixture("fixtureB");
  for (int i = 0; i < b.num_arcs(); ++i) CHECK_FALSE(b.is_boundary_homotopic(i));

  const Triangulation c = fixture("fixtureC");
  for (int i = 0; i < c.num_arcs(); ++i) CHECK(c.is_boundary_homotopic(i) == (c.arc_label(i) == "4"));
  const int four = c.arc_index("4");
  CHECK(c.arc_sides(four)[c.disc_side(four)].triangle == 3);

  const Triangulation d = fixture("fixtureD");
  for (int i = 0; i < d.num_arcs(); ++i) CHECK(d.is_boundary_homotopic(i));

  CHECK_THROWS_AS(b.arc_index("8"), Error);
}

TEST_CASE("cutting along an arc") {
  const Triangulation a = fixture("fixtureA");
  const auto pieces = a.cut_along_arc(a.arc_index("1"));
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].surface().is_disc());
  CHECK(pieces[0].num_points() == 4);

  const Triangulation b = fixture("fixtureB");
  const auto cut1 = b.cut_along_arc(b.arc_index("1"));
  REQUIRE(cut1.size() == 1);
  CHECK(cut1[0].surface().num_components() == 2);

  const Triangulation c = fixture("fixtureC");
  const auto cut4 = c.cut_along_arc(c.arc_index("4"));
  REQUIRE(cut4.size() == 2);
  CHECK(cut4[1].surface().is_disc());
  CHECK(cut4[1].num_triangles() == 1);

  const Triangulation d = fixture("fixtureD");
  for (int i = 0; i < d.num_arcs(); ++i) {
    const auto parts = d.cut_along_arc(i);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].surface().is_disc());
    CHECK(parts[1].surface().is_disc());
  }
}

TEST_CASE("flip is an involution and keeps the surface") {
  for (const auto& name : surfalg::test::fixture_names()) {
    const Triangulation t = fixture(name);
    for (int i = 0; i < t.num_arcs(); ++i) {
      const Triangulation f = t.flip(i);
      CHECK(same_surface(f.surface(), t.surface()));
      CHECK(f.num_arcs() == t.num_arcs());
      CHECK(f.arc_label(i) == t.arc_label(i));
      CHECK(isomorphic(f.flip(i), t));
    }
  }
  const Triangulation a = fixture("fixtureA");
  CHECK(a.flip(0).num_triangles() == 2);
}

TEST_CASE("boundary statistics") {
  const BoundaryStatistics sa = fixture("fixtureA").boundary_statistics();
  CHECK(sa.isolated == std::vector<int>{0, 0});
  CHECK(sa.incident == std::vector<int>{1, 1});
  CHECK(sa.segments == std::vector<int>{1, 1});
  CHECK(sa.chi == std::vector<int>{0, 0});

  for (const char* name : {"fixtureB", "fixtureC"}) {
    const BoundaryStatistics st = fixture(name).boundary_statistics();
    CHECK(st.isolated == st.chi);
    for (std::size_t i = 0; i < st.points.size(); ++i) {
      CHECK(st.incident[i] == st.points[i] - st.isolated[i]);
      CHECK(st.segments[i] == st.points[i] - 2 * st.isolated[i]);
    }
  }
  CHECK(fixture("fixtureC").boundary_statistics().isolated == std::vector<int>{0, 0, 1});
}

TEST_CASE("isomorphisms of gluing data") {
  for (const auto& name : surfalg::test::fixture_names()) {
    const Triangulation t = fixture(name);
    const Triangulation u(surfalg::test::scrambled(t.specs(), 7));
    CHECK(canonical_code(t) == canonical_code(u));
    const auto isos = triangulation_isomorphisms(t, u);
    REQUIRE_FALSE(isos.empty());
    for (const TriangulationIso& iso : isos) {
      for (int tri = 0; tri < t.num_triangles(); ++tri)
        for (int k = 0; k < 3; ++k) {
          const Side& from = t.side({tri, k});
          const Side& to = u.side(iso.map({tri, k}));
          CHECK(from.is_arc() == to.is_arc());
        }
    }
  }
  CHECK_FALSE(isomorphic(fixture("fixtureB"), fixture("fixtureC")));
  const Triangulation b = fixture("fixtureB");
  const auto autos = triangulation_isomorphisms(b, b);
  CHECK(autos.size() >= 1);
}
