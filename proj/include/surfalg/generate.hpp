#pragma once

#include <random>
#include <vector>

#include "surfalg/curves.hpp"
#include "surfalg/triangulation.hpp"

namespace surfalg {

/// Fan triangulation of the polygon [a1,b1]...[ag,bg] e1 B1 e1^-1 ... B_b, where
/// B_i is a chain of points[i] boundary segments.
Triangulation polygon_triangulation(int genus, const std::vector<int>& points);

/// Words for closed curves crossing the a_i and b_i edges of the polygon once,
/// valid on polygon_triangulation(genus, points) itself.
std::vector<CurveWord> polygon_generator_words(int genus, const std::vector<int>& points);

Triangulation random_flips(Triangulation t, int count, std::mt19937_64& rng);

/// Every triangulation of the convex p-gon, p >= 3.
std::vector<Triangulation> disc_triangulations(int p);

struct SurfaceShape {
  int genus = 0;
  std::vector<int> points;
};

/// Uniform over genus <= max_genus, 1 <= b <= max_b and total points <= max_points,
/// excluding the disc.
SurfaceShape random_shape(std::mt19937_64& rng, int max_genus, int max_b, int max_points);

}  // namespace surfalg
