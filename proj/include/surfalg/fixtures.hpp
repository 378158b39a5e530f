#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "surfalg/triangulation.hpp"

namespace surfalg {

/// A named degree map, given by arrow label.
struct NamedDegrees {
  std::string name;
  std::vector<std::pair<std::string, int>> values;
};

struct Fixture {
  std::string name;
  std::vector<TriangleSpec> triangles;
  std::vector<NamedDegrees> cuts;
};

/// fixtureA: annulus with one marked point on each boundary component.
/// fixtureB: three boundary components with 1, 1 and 2 marked points.
/// fixtureC: a second triangulation of the fixtureB surface.
/// fixtureD: fan triangulation of the pentagon.
const std::vector<Fixture>& builtin_fixtures();
std::optional<Fixture> find_fixture(std::string_view name);

}  // namespace surfalg
