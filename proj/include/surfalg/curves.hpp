#pragma once

#include <optional>
#include <vector>

#include "surfalg/quiver.hpp"
#include "surfalg/triangulation.hpp"

namespace surfalg {

/// Integer coefficient per arrow.
using CurveClass = std::vector<int>;

/// One passage of a curve through a triangle, entering through side `in` and
/// leaving through side `out`.
struct CornerTraversal {
  int triangle = -1;
  int in = -1;
  int out = -1;
};

/// Cyclic.
using CurveWord = std::vector<CornerTraversal>;

/// Class of the curve running once around boundary component i, keeping the
/// surface on its left. Throws DiscSurface.
CurveClass boundary_curve_class(const Triangulation& t, const QuiverWithFaces& q, int i);

/// Throws InvalidWord if consecutive traversals are not glued or a traversal
/// leaves through the side it entered by.
CurveClass curve_class_of_word(const Triangulation& t, const QuiverWithFaces& q, const CurveWord& w);

CurveWord reversed(const CurveWord& w);

/// Classes of a1, b1, ..., ag, bg, c1, ..., cb.
struct GeneratorSystem {
  std::vector<CurveClass> classes;
};

/// The user supplies the 2g interior generators; the b boundary classes are
/// appended. Throws GeneratorCountMismatch, DiscSurface.
GeneratorSystem generator_system(const Triangulation& t, const QuiverWithFaces& q,
                                 const std::vector<CurveWord>& interior = {});

long long evaluate(const DegreeMap& d, const CurveClass& c);

/// Throws NotOneDegree, DiscSurface, GeneratorCountMismatch.
std::vector<long long> weight(const Triangulation& t, const QuiverWithFaces& q, const DegreeMap& d,
                              const GeneratorSystem& eps);
/// Evaluations on the boundary classes only.
std::vector<long long> boundary_weight(const Triangulation& t, const QuiverWithFaces& q, const DegreeMap& d);

/// r with d - d2 = r(target) - r(source) on every arrow, r = 0 at the first
/// vertex of each connected component. Throws QuiverMismatch.
std::optional<std::vector<long long>> coboundary_witness(const QuiverWithFaces& q, const DegreeMap& d,
                                                         const DegreeMap& d2);
/// d + coboundary of r.
DegreeMap add_coboundary(const QuiverWithFaces& q, const DegreeMap& d, const std::vector<long long>& r);

}  // namespace surfalg
