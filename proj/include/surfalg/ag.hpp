#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "surfalg/quiver.hpp"
#include "surfalg/triangulation.hpp"

namespace surfalg {

/// Multiset of pairs (n, m), as pair -> multiplicity.
using AGInvariant = std::map<std::pair<int, int>, int>;

std::string to_string(const AGInvariant& ag);

/// Per boundary component, the number of cut angles whose vertex lies on it.
/// Throws NotAdmissible.
std::vector<int> local_cuts(const Triangulation& t, const QuiverWithFaces& q, const DegreeMap& d);

/// n_i = n(B_i) + l_i, m_i = m(B_i) + 2 l_i. Throws NotAdmissible, DiscSurface.
AGInvariant ag_formula(const Triangulation& t, const QuiverWithFaces& q, const DegreeMap& d);

/// (p_i + w_i, p_i + 2 w_i) from the boundary weight. Throws DiscSurface.
AGInvariant ag_weights(const Triangulation& t, const std::vector<long long>& w);

/// Thread walk on an arbitrary gentle presentation. Throws NotGentle.
AGInvariant ag_direct(const GentlePresentation& p);

}  // namespace surfalg
