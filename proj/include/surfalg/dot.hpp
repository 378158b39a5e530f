#pragma once

#include <string>

#include "surfalg/quiver.hpp"

namespace surfalg {

/// Nodes sorted by label; arrows of a face are grouped in a subgraph per face.
std::string to_dot(const QuiverWithFaces& q);
/// Arrows as solid edges, each relation ab as a dashed edge from the source
/// of a to the target of b.
std::string to_dot(const GentlePresentation& p);

}  // namespace surfalg
