#include "surfalg/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "surfalg/error.hpp"

namespace surfalg {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void merge(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

int next3(int k) { return (k + 1) % 3; }
int prev3(int k) { return (k + 2) % 3; }

struct Traversal {
  std::vector<int> code;
  std::vector<int> order;     // order[id] = triangle
  std::vector<int> rotation;  // rotation[triangle] = side placed first
};

Traversal traverse(const Triangulation& t, int start, int rot) {
  const int n = t.num_triangles();
  Traversal out;
  out.rotation.assign(n, -1);
  std::vector<int> id(n, -1);
  out.code.reserve(3 * n);
  out.order.reserve(n);
  id[start] = 0;
  out.rotation[start] = rot;
  out.order.push_back(start);
  for (std::size_t head = 0; head < out.order.size(); ++head) {
    const int tri = out.order[head];
    for (int j = 0; j < 3; ++j) {
      const int k = (out.rotation[tri] + j) % 3;
      const Side& s = t.sides(tri)[k];
      if (!s.is_arc()) {
        out.code.push_back(-1);
        continue;
      }
      const SideRef other = t.glued({tri, k});
      if (id[other.triangle] < 0) {
        id[other.triangle] = static_cast<int>(out.order.size());
        out.rotation[other.triangle] = other.side;
        out.order.push_back(other.triangle);
      }
      out.code.push_back(3 * id[other.triangle] + (other.side - out.rotation[other.triangle] + 3) % 3);
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(TriangleClass c) {
  switch (c) {
    case TriangleClass::HomotopicToBoundary: return "HomotopicToBoundary";
    case TriangleClass::BasedOnBoundary: return "BasedOnBoundary";
    case TriangleClass::Uncontractible: return "Uncontractible";
  }
  return "?";
}

int SurfaceData::num_points() const {
  return std::accumulate(points_per_component.begin(), points_per_component.end(), 0);
}

bool same_surface(const SurfaceData& a, const SurfaceData& b) {
  if (a.genus != b.genus || a.num_components() != b.num_components()) return false;
  auto pa = a.points_per_component;
  auto pb = b.points_per_component;
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  return pa == pb;
}

Triangulation::Triangulation(const std::vector<TriangleSpec>& specs) {
  if (specs.empty()) throw Error(ErrorKind::Malformed, "", "no triangles");
  std::map<std::string, int, std::less<>> arc_ids;
  std::map<std::string, int, std::less<>> seg_ids;
  std::vector<int> arc_uses;
  std::vector<int> seg_uses;
  triangles_.reserve(specs.size());
  for (const TriangleSpec& spec : specs) {
    TriangleSides sides;
    for (int k = 0; k < 3; ++k) {
      const SideSpec& s = spec[k];
      if (s.label.empty()) throw Error(ErrorKind::Malformed, "", "empty side label");
      if (s.is_arc) {
        if (s.dir != 1 && s.dir != -1) throw Error(ErrorKind::Malformed, s.label, "direction must be +1 or -1");
        if (seg_ids.count(s.label)) throw Error(ErrorKind::Malformed, s.label, "label used as arc and segment");
        auto [it, fresh] = arc_ids.try_emplace(s.label, static_cast<int>(arc_labels_.size()));
        if (fresh) {
          arc_labels_.push_back(s.label);
          arc_uses.push_back(0);
        }
        if (++arc_uses[it->second] > 2) throw Error(ErrorKind::DuplicateArcUse, s.label, "arc used more than twice");
        sides[k] = Side::arc(it->second, s.dir);
      } else {
        if (arc_ids.count(s.label)) throw Error(ErrorKind::Malformed, s.label, "label used as arc and segment");
        auto [it, fresh] = seg_ids.try_emplace(s.label, static_cast<int>(segment_labels_.size()));
        if (fresh) {
          segment_labels_.push_back(s.label);
          seg_uses.push_back(0);
        }
        if (++seg_uses[it->second] > 1) throw Error(ErrorKind::DuplicateSegmentUse, s.label);
        sides[k] = Side::segment(it->second);
      }
    }
    triangles_.push_back(sides);
  }
  for (std::size_t a = 0; a < arc_uses.size(); ++a) {
    if (arc_uses[a] != 2) throw Error(ErrorKind::UnglueableSide, arc_labels_[a], "arc has only one side");
  }
  derive_topology();
}

void Triangulation::derive_topology() {
  const int n_tri = num_triangles();
  const int n_arcs = num_arcs();

  arc_sides_.assign(n_arcs, {SideRef{}, SideRef{}});
  std::vector<int> filled(n_arcs, 0);
  segment_sides_.assign(num_segments(), SideRef{});
  for (int t = 0; t < n_tri; ++t) {
    for (int k = 0; k < 3; ++k) {
      const Side& s = triangles_[t][k];
      if (s.is_arc())
        arc_sides_[s.index][filled[s.index]++] = {t, k};
      else
        segment_sides_[s.index] = {t, k};
    }
  }
  for (int a = 0; a < n_arcs; ++a) {
    if (side(arc_sides_[a][0]).dir == side(arc_sides_[a][1]).dir)
      throw Error(ErrorKind::NonOrientableGluing, arc_labels_[a], "both sides carry the same direction");
  }

  DisjointSets pieces(n_tri);
  for (int a = 0; a < n_arcs; ++a) pieces.merge(arc_sides_[a][0].triangle, arc_sides_[a][1].triangle);
  for (int t = 1; t < n_tri; ++t) {
    if (pieces.find(t) != pieces.find(0)) {
      const Side& s = triangles_[t][0];
      throw Error(ErrorKind::Disconnected, s.is_arc() ? arc_labels_[s.index] : segment_labels_[s.index],
                  "triangle " + std::to_string(t) + " is not connected to triangle 0");
    }
  }

  // Walk each corner class from the corner after its incoming segment.
  std::vector<std::vector<int>> fans;
  std::vector<char> seen(3 * n_tri, 0);
  for (int c = 0; c < 3 * n_tri; ++c) {
    const int tri = c / 3, v = c % 3;
    if (triangles_[tri][prev3(v)].is_arc()) continue;
    std::vector<int> fan;
    int cur = c;
    while (true) {
      fan.push_back(cur);
      seen[cur] = 1;
      const int ct = cur / 3, cv = cur % 3;
      const Side& out = triangles_[ct][cv];
      if (!out.is_arc()) break;
      const SideRef other = glued({ct, cv});
      cur = 3 * other.triangle + next3(other.side);
    }
    fans.push_back(std::move(fan));
  }
  for (int c = 0; c < 3 * n_tri; ++c) {
    if (!seen[c]) {
      const Side& s = triangles_[c / 3][c % 3];
      throw Error(ErrorKind::InteriorVertex, s.is_arc() ? arc_labels_[s.index] : segment_labels_[s.index],
                  "a vertex is not on the boundary (punctures are not supported)");
    }
  }

  // Boundary cycles: a segment starts at the point whose fan ends with it.
  std::vector<int> fan_starting_at(3 * n_tri, -1);
  std::vector<int> fan_ending_at(3 * n_tri, -1);
  for (std::size_t f = 0; f < fans.size(); ++f) {
    fan_starting_at[fans[f].front()] = static_cast<int>(f);
    fan_ending_at[fans[f].back()] = static_cast<int>(f);
  }
  auto next_segment = [&](int seg) {
    const SideRef r = segment_sides_[seg];
    const int f = fan_starting_at[3 * r.triangle + next3(r.side)];
    const int last = fans[f].back();
    return triangles_[last / 3][last % 3].index;
  };
  std::vector<int> seg_order(num_segments());
  std::iota(seg_order.begin(), seg_order.end(), 0);
  std::sort(seg_order.begin(), seg_order.end(),
            [&](int x, int y) { return segment_labels_[x] < segment_labels_[y]; });
  std::vector<int> seg_component(num_segments(), -1);
  surface_ = SurfaceData{};
  std::vector<int> point_of_fan(fans.size(), -1);
  fans_.clear();
  point_component_.clear();
  for (int start : seg_order) {
    if (seg_component[start] >= 0) continue;
    BoundaryComponent comp;
    const int ci = surface_.num_components();
    int seg = start;
    do {
      seg_component[seg] = ci;
      comp.segments.push_back(seg);
      const SideRef r = segment_sides_[seg];
      const int f = fan_ending_at[3 * r.triangle + r.side];
      point_of_fan[f] = static_cast<int>(fans_.size());
      comp.points.push_back(point_of_fan[f]);
      fans_.push_back(fans[f]);
      point_component_.push_back(ci);
      seg = next_segment(seg);
    } while (seg != start);
    surface_.points_per_component.push_back(static_cast<int>(comp.points.size()));
    surface_.components.push_back(std::move(comp));
  }
  corner_point_.assign(3 * n_tri, -1);
  for (std::size_t p = 0; p < fans_.size(); ++p)
    for (int c : fans_[p]) corner_point_[c] = static_cast<int>(p);

  const int V = num_points();
  const int E = n_arcs + num_segments();
  surface_.euler_characteristic = V - E + n_tri;
  const int b = surface_.num_components();
  const int twice_genus = 2 - b - surface_.euler_characteristic;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw Error(ErrorKind::InvariantViolation, "", "inconsistent Euler characteristic");
  surface_.genus = twice_genus / 2;
  const int g = surface_.genus, p = V;
  if (n_arcs != 6 * g - 6 + 3 * b + p || n_tri != 4 * g - 4 + 2 * b + p)
    throw Error(ErrorKind::InvariantViolation, "", "arc or triangle count does not match the surface");

  boundary_homotopic_.assign(n_arcs, 0);
  disc_side_.assign(n_arcs, -1);
  for (int a = 0; a < n_arcs; ++a) {
    const std::vector<CutPiece> cut = analyze_cut(a);
    for (const CutPiece& piece : cut) {
      if (piece.euler_characteristic == 1 && piece.boundary_sides < 3)
        throw Error(ErrorKind::MonogonOrDigon, arc_labels_[a]);
    }
    if (cut.size() != 2) continue;
    int disc = -1;
    for (int i = 0; i < 2; ++i) {
      if (cut[i].euler_characteristic != 1) continue;
      if (disc < 0 || cut[i].triangles.size() < cut[disc].triangles.size()) disc = i;
    }
    if (disc < 0) continue;
    boundary_homotopic_[a] = 1;
    const auto& tris = cut[disc].triangles;
    disc_side_[a] =
        std::find(tris.begin(), tris.end(), arc_sides_[a][0].triangle) != tris.end() ? 0 : 1;
  }
}

std::vector<Triangulation::CutPiece> Triangulation::analyze_cut(int arc) const {
  const int n_tri = num_triangles();
  DisjointSets pieces(n_tri);
  DisjointSets corners(3 * n_tri);
  for (int a = 0; a < num_arcs(); ++a) {
    if (a == arc) continue;
    const auto [r1, r2] = arc_sides_[a];
    pieces.merge(r1.triangle, r2.triangle);
    corners.merge(3 * r1.triangle + r1.side, 3 * r2.triangle + next3(r2.side));
    corners.merge(3 * r1.triangle + next3(r1.side), 3 * r2.triangle + r2.side);
  }
  std::map<int, int> piece_of_root;
  std::vector<CutPiece> out;
  std::vector<std::vector<int>> corner_roots;
  for (int t = 0; t < n_tri; ++t) {
    auto [it, fresh] = piece_of_root.try_emplace(pieces.find(t), static_cast<int>(out.size()));
    if (fresh) {
      out.emplace_back();
      corner_roots.emplace_back();
    }
    CutPiece& piece = out[it->second];
    piece.triangles.push_back(t);
    for (int k = 0; k < 3; ++k) {
      corner_roots[it->second].push_back(corners.find(3 * t + k));
      const Side& s = triangles_[t][k];
      if (!s.is_arc() || s.index == arc) ++piece.boundary_sides;
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto& roots = corner_roots[i];
    std::sort(roots.begin(), roots.end());
    const int V = static_cast<int>(std::unique(roots.begin(), roots.end()) - roots.begin());
    const int F = static_cast<int>(out[i].triangles.size());
    // Each remaining arc contributes two sides, each boundary side one.
    const int E = (3 * F - out[i].boundary_sides) / 2 + out[i].boundary_sides;
    out[i].euler_characteristic = V - E + F;
  }
  return out;
}

std::optional<int> Triangulation::find_arc(std::string_view label) const {
  for (int a = 0; a < num_arcs(); ++a)
    if (arc_labels_[a] == label) return a;
  return std::nullopt;
}

int Triangulation::arc_index(std::string_view label) const {
  if (auto a = find_arc(label)) return *a;
  throw Error(ErrorKind::UnknownArc, std::string(label));
}

SideRef Triangulation::glued(SideRef ref) const {
  const Side& s = side(ref);
  const auto& both = arc_sides_[s.index];
  return both[0] == ref ? both[1] : both[0];
}

int Triangulation::component_of_segment(int seg) const {
  const SideRef r = segment_sides_[seg];
  return point_component_[point_at(r.triangle, r.side)];
}

bool Triangulation::side_is_boundary_homotopic(int triangle, int k) const {
  const Side& s = triangles_[triangle][k];
  return !s.is_arc() || boundary_homotopic_[s.index];
}

int Triangulation::boundary_component_of_side(int triangle, int k) const {
  return point_component_[point_at(triangle, k)];
}

bool Triangulation::is_internal(int t) const {
  const auto& s = triangles_[t];
  return s[0].is_arc() && s[1].is_arc() && s[2].is_arc();
}

TriangleClass Triangulation::classify(int t) const {
  int count = 0;
  for (int k = 0; k < 3; ++k) count += side_is_boundary_homotopic(t, k) ? 1 : 0;
  switch (count) {
    case 3: return TriangleClass::HomotopicToBoundary;
    case 1: return TriangleClass::BasedOnBoundary;
    case 0: return TriangleClass::Uncontractible;
    default:
      throw Error(ErrorKind::InvariantViolation, std::to_string(t),
                  "triangle has exactly two boundary-homotopic sides");
  }
}

std::vector<TriangleSpec> Triangulation::specs() const {
  std::vector<TriangleSpec> out;
  out.reserve(triangles_.size());
  for (const TriangleSides& sides : triangles_) {
    TriangleSpec spec;
    for (int k = 0; k < 3; ++k) {
      const Side& s = sides[k];
      spec[k] = s.is_arc() ? SideSpec::arc(arc_labels_[s.index], s.dir) : SideSpec::segment(segment_labels_[s.index]);
    }
    out.push_back(spec);
  }
  return out;
}

std::vector<Triangulation> Triangulation::cut_along_arc(int arc) const {
  if (arc < 0 || arc >= num_arcs()) throw Error(ErrorKind::UnknownArc, std::to_string(arc));
  auto fresh_label = [&](std::string base) {
    while (find_arc(base) || std::find(segment_labels_.begin(), segment_labels_.end(), base) != segment_labels_.end())
      base += "'";
    return base;
  };
  const std::string label_a = fresh_label(arc_labels_[arc] + "'a");
  const std::string label_b = fresh_label(arc_labels_[arc] + "'b");
  std::vector<TriangleSpec> all = specs();
  const auto [r1, r2] = arc_sides_[arc];
  all[r1.triangle][r1.side] = SideSpec::segment(label_a);
  all[r2.triangle][r2.side] = SideSpec::segment(label_b);

  std::vector<Triangulation> out;
  for (const CutPiece& piece : analyze_cut(arc)) {
    std::vector<TriangleSpec> part;
    for (int t : piece.triangles) part.push_back(all[t]);
    out.emplace_back(part);
  }
  return out;
}

Triangulation Triangulation::flip(int arc) const {
  if (arc < 0 || arc >= num_arcs()) throw Error(ErrorKind::UnknownArc, std::to_string(arc));
  const auto [r1, r2] = arc_sides_[arc];
  const TriangleSides& s1 = triangles_[r1.triangle];
  const TriangleSides& s2 = triangles_[r2.triangle];
  const Side x1 = s1[next3(r1.side)], y1 = s1[prev3(r1.side)];
  const Side x2 = s2[next3(r2.side)], y2 = s2[prev3(r2.side)];
  Triangulation out = *this;
  out.triangles_[r1.triangle] = {y1, x2, Side::arc(arc, +1)};
  out.triangles_[r2.triangle] = {y2, x1, Side::arc(arc, -1)};
  out.derive_topology();
  return out;
}

BoundaryStatistics Triangulation::boundary_statistics() const {
  const int b = surface_.num_components();
  BoundaryStatistics st;
  st.points = surface_.points_per_component;
  st.isolated.assign(b, 0);
  st.incident.assign(b, 0);
  st.segments.assign(b, 0);
  st.chi.assign(b, 0);
  for (int p = 0; p < num_points(); ++p) {
    if (is_isolated(p))
      ++st.isolated[point_component_[p]];
    else
      ++st.incident[point_component_[p]];
  }
  for (int i = 0; i < b; ++i) {
    const BoundaryComponent& comp = surface_.components[i];
    const int len = static_cast<int>(comp.points.size());
    for (int k = 0; k < len; ++k) {
      if (!is_isolated(comp.points[k]) && !is_isolated(comp.points[(k + 1) % len])) ++st.segments[i];
    }
  }
  for (int t = 0; t < num_triangles(); ++t) {
    if (!is_internal(t)) continue;
    std::vector<int> touched;
    for (int k = 0; k < 3; ++k)
      if (side_is_boundary_homotopic(t, k)) touched.push_back(boundary_component_of_side(t, k));
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int c : touched) ++st.chi[c];
  }
  return st;
}

CanonicalForm canonical_form(const Triangulation& t) {
  CanonicalForm form;
  for (int tri = 0; tri < t.num_triangles(); ++tri) {
    for (int r = 0; r < 3; ++r) {
      Traversal tr = traverse(t, tri, r);
      if (!form.orders.empty() && tr.code > form.code) continue;
      if (form.orders.empty() || tr.code < form.code) {
        form.code = std::move(tr.code);
        form.orders.clear();
        form.rotations.clear();
      }
      form.orders.push_back(std::move(tr.order));
      form.rotations.push_back(std::move(tr.rotation));
    }
  }
  return form;
}

int flippable_arc(const Triangulation& t, std::string_view label) {
  if (auto a = t.find_arc(label)) return *a;
  for (int s = 0; s < t.num_segments(); ++s)
    if (t.segment_label(s) == label) throw Error(ErrorKind::BoundarySegmentNotFlippable, std::string(label));
  throw Error(ErrorKind::UnknownArc, std::string(label));
}

std::vector<int> canonical_code(const Triangulation& t) { return canonical_form(t).code; }

bool isomorphic(const Triangulation& a, const Triangulation& b) {
  if (a.num_triangles() != b.num_triangles() || a.num_arcs() != b.num_arcs()) return false;
  return canonical_code(a) == canonical_code(b);
}

std::vector<TriangulationIso> triangulation_isomorphisms(const Triangulation& from, const Triangulation& to) {
  std::vector<TriangulationIso> out;
  if (from.num_triangles() != to.num_triangles() || from.num_arcs() != to.num_arcs()) return out;
  const CanonicalForm src = canonical_form(from);
  const CanonicalForm dst = canonical_form(to);
  if (src.code != dst.code) return out;
  const int n = from.num_triangles();
  const auto& target_order = dst.orders.front();
  const auto& target_rotation = dst.rotations.front();
  for (std::size_t k = 0; k < src.orders.size(); ++k) {
    TriangulationIso iso;
    iso.triangle_map.assign(n, -1);
    iso.shift.assign(n, 0);
    for (int id = 0; id < n; ++id) {
      const int a = src.orders[k][id];
      const int b = target_order[id];
      iso.triangle_map[a] = b;
      iso.shift[a] = (target_rotation[b] - src.rotations[k][a] + 3) % 3;
    }
    iso.arc_map.assign(from.num_arcs(), -1);
    for (int a = 0; a < from.num_arcs(); ++a) iso.arc_map[a] = to.side(iso.map(from.arc_sides(a)[0])).index;
    out.push_back(std::move(iso));
  }
  return out;
}

}  // namespace surfalg
