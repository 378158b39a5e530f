#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace surfalg {

enum class SideKind : std::uint8_t { Arc, Segment };

/// One side slot of an oriented triangle. Arcs carry a direction flag: +1 when
/// the triangle's counterclockwise boundary runs along the arc's own
/// orientation, -1 otherwise.
struct Side {
  SideKind kind = SideKind::Segment;
  int index = -1;
  int dir = 0;

  static Side arc(int index, int dir) { return {SideKind::Arc, index, dir}; }
  static Side segment(int index) { return {SideKind::Segment, index, 0}; }
  bool is_arc() const { return kind == SideKind::Arc; }

  friend bool operator==(const Side&, const Side&) = default;
};

/// Sides in counterclockwise order. Side k runs from vertex k to vertex k+1.
using TriangleSides = std::array<Side, 3>;

struct SideRef {
  int triangle = -1;
  int side = -1;
  friend bool operator==(const SideRef&, const SideRef&) = default;
};

/// Textual side record, as found in a triangulation document.
struct SideSpec {
  std::string label;
  bool is_arc = false;
  int dir = 0;

  static SideSpec arc(std::string label, int dir) { return {std::move(label), true, dir}; }
  static SideSpec segment(std::string label) { return {std::move(label), false, 0}; }
};

using TriangleSpec = std::array<SideSpec, 3>;

enum class TriangleClass { HomotopicToBoundary, BasedOnBoundary, Uncontractible };

std::string_view to_string(TriangleClass c);

struct BoundaryComponent {
  std::vector<int> segments;  // in boundary order
  std::vector<int> points;    // points[k] is where segments[k] starts
};

struct SurfaceData {
  int genus = 0;
  int euler_characteristic = 0;
  std::vector<BoundaryComponent> components;
  std::vector<int> points_per_component;

  int num_components() const { return static_cast<int>(components.size()); }
  int num_points() const;
  bool is_disc() const { return genus == 0 && num_components() == 1; }
  /// 4g-4+2b: uncontractible triangles, and the boundary-weight sum.
  int uncontractible_count() const { return 4 * genus - 4 + 2 * num_components(); }
  /// 2g+b-1
  int first_betti_number() const { return 2 * genus + num_components() - 1; }
};

bool same_surface(const SurfaceData& a, const SurfaceData& b);

struct BoundaryStatistics {
  std::vector<int> points;    // p_i
  std::vector<int> isolated;  // q_i, marked points touching no arc
  std::vector<int> incident;  // n(B_i, T)
  std::vector<int> segments;  // m(B_i, T)
  std::vector<int> chi;       // internal triangles with a side homotopic to a segment of B_i
};

/// Ideal triangulation of an unpunctured marked surface, given as gluing data
/// of oriented triangles. Marked points, boundary components and the topology
/// are derived once on construction; the value is immutable afterwards.
class Triangulation {
 public:
  /// Validates the gluing and throws surfalg::Error naming the offending label.
  explicit Triangulation(const std::vector<TriangleSpec>& triangles);

  int num_triangles() const { return static_cast<int>(triangles_.size()); }
  int num_arcs() const { return static_cast<int>(arc_labels_.size()); }
  int num_segments() const { return static_cast<int>(segment_labels_.size()); }
  int num_points() const { return static_cast<int>(fans_.size()); }

  const TriangleSides& sides(int t) const { return triangles_[t]; }
  const Side& side(SideRef ref) const { return triangles_[ref.triangle][ref.side]; }
  const std::string& arc_label(int arc) const { return arc_labels_[arc]; }
  const std::string& segment_label(int seg) const { return segment_labels_[seg]; }
  const std::vector<std::string>& arc_labels() const { return arc_labels_; }

  std::optional<int> find_arc(std::string_view label) const;
  /// Throws UnknownArc.
  int arc_index(std::string_view label) const;

  const std::array<SideRef, 2>& arc_sides(int arc) const { return arc_sides_[arc]; }
  SideRef segment_side(int seg) const { return segment_sides_[seg]; }
  /// The other occurrence of the arc sitting at `ref`.
  SideRef glued(SideRef ref) const;

  int point_at(int triangle, int vertex) const { return corner_point_[3 * triangle + vertex]; }
  /// Corners (3*triangle+vertex) around a marked point, from the corner after
  /// the incoming boundary segment to the corner before the outgoing one.
  const std::vector<int>& fan(int point) const { return fans_[point]; }
  bool is_isolated(int point) const { return fans_[point].size() == 1; }
  int component_of_point(int point) const { return point_component_[point]; }
  int component_of_segment(int seg) const;

  const SurfaceData& surface() const { return surface_; }

  bool is_boundary_homotopic(int arc) const { return boundary_homotopic_[arc] != 0; }
  /// Segments count as boundary-homotopic.
  bool side_is_boundary_homotopic(int triangle, int side) const;
  /// Which entry of arc_sides(arc) faces the disc the arc cuts out, or -1.
  int disc_side(int arc) const { return disc_side_[arc]; }
  /// Component carrying both endpoints of a boundary-homotopic side.
  int boundary_component_of_side(int triangle, int side) const;

  bool is_internal(int t) const;
  /// Throws InvariantViolation if exactly two sides are boundary-homotopic.
  TriangleClass classify(int t) const;

  /// Splits the arc into two boundary segments (labelled `<arc>'a`, `<arc>'b`)
  /// and returns the connected pieces.
  std::vector<Triangulation> cut_along_arc(int arc) const;

  /// Replaces the arc by the other diagonal of its quadrilateral; the new arc
  /// keeps the old label and index, and the two triangles keep their indices.
  Triangulation flip(int arc) const;

  BoundaryStatistics boundary_statistics() const;

  /// Textual form of the gluing data, suitable for constructing a copy.
  std::vector<TriangleSpec> specs() const;

 private:
  struct CutPiece {
    std::vector<int> triangles;
    int euler_characteristic = 0;
    int boundary_sides = 0;
  };
  std::vector<CutPiece> analyze_cut(int arc) const;
  void derive_topology();

  std::vector<TriangleSides> triangles_;
  std::vector<std::string> arc_labels_;
  std::vector<std::string> segment_labels_;
  std::vector<std::array<SideRef, 2>> arc_sides_;
  std::vector<SideRef> segment_sides_;
  std::vector<int> corner_point_;
  std::vector<std::vector<int>> fans_;
  std::vector<int> point_component_;
  std::vector<char> boundary_homotopic_;
  std::vector<int> disc_side_;
  SurfaceData surface_;
};

/// A gluing isomorphism: triangle t goes to triangle_map[t], and side k of t
/// to side (k + shift[t]) % 3 of the image.
struct TriangulationIso {
  std::vector<int> triangle_map;
  std::vector<int> shift;
  std::vector<int> arc_map;

  SideRef map(SideRef ref) const {
    return {triangle_map[ref.triangle], (ref.side + shift[ref.triangle]) % 3};
  }
};

/// Every labeling attaining the minimal traversal code. For labeling k,
/// orders[k][id] is a triangle and rotations[k][triangle] its first side.
struct CanonicalForm {
  std::vector<int> code;
  std::vector<std::vector<int>> orders;
  std::vector<std::vector<int>> rotations;
};
CanonicalForm canonical_form(const Triangulation& t);

/// Throws UnknownArc, or BoundarySegmentNotFlippable for a segment label.
int flippable_arc(const Triangulation& t, std::string_view label);

/// Canonical code of the gluing data: equal codes iff the triangulations are
/// related by an orientation preserving homeomorphism.
std::vector<int> canonical_code(const Triangulation& t);
bool isomorphic(const Triangulation& a, const Triangulation& b);
std::vector<TriangulationIso> triangulation_isomorphisms(const Triangulation& from, const Triangulation& to);

}  // namespace surfalg
