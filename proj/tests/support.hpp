#pragma once

#include <algorithm>
#include <random>

#include "surfalg/fixtures.hpp"
#include "surfalg/triangulation.hpp"

namespace surfalg::test {

inline Triangulation fixture(std::string_view name) { return Triangulation(find_fixture(name)->triangles); }

inline std::vector<std::string> fixture_names() { return {"fixtureA", "fixtureB", "fixtureC", "fixtureD"}; }

/// Same gluing with triangles shuffled and each one rotated.
inline std::vector<TriangleSpec> scrambled(std::vector<TriangleSpec> specs, unsigned seed) {
  std::mt19937 rng(seed);
  std::shuffle(specs.begin(), specs.end(), rng);
  for (TriangleSpec& t : specs) std::rotate(t.begin(), t.begin() + rng() % 3, t.end());
  return specs;
}

}  // namespace surfalg::test
