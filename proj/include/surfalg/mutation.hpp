#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfalg/quiver.hpp"
#include "surfalg/triangulation.hpp"

namespace surfalg {

/// Mutation of a quiver with faces at vertex i: arrows at i are reversed, each
/// path j -> i -> k either cancels the face arrow closing it or gains a
/// composite arrow [ab] together with the face ([ab], b*, a*). Throws UnknownVertex.
QuiverWithFaces mutate_qp(const QuiverWithFaces& q, int i);

struct GradedTriangulation {
  Triangulation triangulation;
  DegreeMap degree;  // on quiver_of(triangulation)
};

enum class MutationSide { Left, Right };

/// Flip at the arc together with the degree update. Throws UnknownArc, NotOneDegree.
GradedTriangulation graded_mutate(const GradedTriangulation& gt, int arc, MutationSide side);

struct FlipSequence {
  std::vector<std::string> arcs;
  TriangulationIso identification;  // from the final triangulation to the target
};

/// Breadth-first search for flips turning `from` into a triangulation isomorphic
/// to `to`. Throws SurfaceMismatch.
std::optional<FlipSequence> flip_path(const Triangulation& from, const Triangulation& to, int max_depth);

}  // namespace surfalg
