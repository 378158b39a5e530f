#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfalg/smith.hpp"
#include "surfalg/triangulation.hpp"

namespace surfalg {

/// Host triangle and corner are -1 for arrows not coming from a triangulation.
struct Arrow {
  int source = -1;
  int target = -1;
  int triangle = -1;
  int corner = -1;
  std::string label;
};

/// A face is an oriented 3-cycle; paths compose left to right, so
/// arrows[0] arrows[1] arrows[2] is a closed path.
struct Face {
  std::array<int, 3> arrows{};
  int triangle = -1;
};

struct QuiverWithFaces {
  std::vector<std::string> vertex_labels;
  std::vector<Arrow> arrows;
  std::vector<Face> faces;

  int num_vertices() const { return static_cast<int>(vertex_labels.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
  int num_faces() const { return static_cast<int>(faces.size()); }
  std::optional<int> find_vertex(std::string_view label) const;
  std::optional<int> find_arrow(std::string_view label) const;
  /// Arrow at the given corner of a triangle, if that angle is an arrow.
  std::optional<int> arrow_at(int triangle, int corner) const;
  /// Face index per arrow, -1 for arrows in no face. Throws ArrowInTwoFaces.
  std::vector<int> face_of_arrows() const;
};

/// Angle between side k-1 and side k of a triangle (at vertex k) is an arrow
/// from the arc of side k-1 to the arc of side k.
QuiverWithFaces quiver_of(const Triangulation& t);

/// Labels "src>tgt#k", k counting parallel arrows from 1 in arrow order.
void assign_arrow_labels(QuiverWithFaces& q);

struct BoundaryComplex {
  IntMatrix d1;  // arrows x faces
  IntMatrix d0;  // vertices x arrows
};

BoundaryComplex boundary_complex(const QuiverWithFaces& q);
/// Free rank of ker d0 / im d1.
int h1_rank(const BoundaryComplex& c);

/// Integer value per arrow, in arrow order.
using DegreeMap = std::vector<int>;

bool is_one_degree(const QuiverWithFaces& q, const DegreeMap& d);
bool is_admissible_cut(const QuiverWithFaces& q, const DegreeMap& d);
/// All 3^faces admissible cuts, in lexicographic order of the chosen face positions.
std::vector<DegreeMap> enumerate_admissible_cuts(const QuiverWithFaces& q);

struct GentlePresentation {
  struct PArrow {
    int source = -1;
    int target = -1;
    std::string label;
  };
  std::vector<std::string> vertex_labels;
  std::vector<PArrow> arrows;
  /// (a, b): the path a then b is zero.
  std::vector<std::pair<int, int>> relations;

  int num_vertices() const { return static_cast<int>(vertex_labels.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
  bool is_relation(int a, int b) const;
};

GentlePresentation jacobian_presentation(const QuiverWithFaces& q);
/// Degree-zero arrows, with the relation ab for each face abc cut at c.
GentlePresentation surface_algebra_presentation(const QuiverWithFaces& q, const DegreeMap& d);

struct GentleCheck {
  bool gentle = true;
  std::vector<std::string> problems;
};
GentleCheck check_gentle(const GentlePresentation& p);

}  // namespace surfalg
