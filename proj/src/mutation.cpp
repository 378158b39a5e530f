#include "surfalg/mutation.hpp"

#include <deque>
#include <map>

#include "surfalg/error.hpp"

namespace surfalg {

QuiverWithFaces mutate_qp(const QuiverWithFaces& q, int i) {
  if (i < 0 || i >= q.num_vertices()) throw Error(ErrorKind::UnknownVertex, std::to_string(i));
  const std::vector<int> face_of = q.face_of_arrows();
  std::vector<int> into, out_of;
  for (int a = 0; a < q.num_arrows(); ++a) {
    if (q.arrows[a].target == i) into.push_back(a);
    if (q.arrows[a].source == i) out_of.push_back(a);
  }
  std::vector<char> dropped_arrow(q.num_arrows(), 0), dropped_face(q.num_faces(), 0);
  std::vector<std::pair<int, int>> composites;
  for (int a : into) {
    for (int b : out_of) {
      const int f = face_of[a];
      if (f >= 0 && f == face_of[b]) {
        const auto& arr = q.faces[f].arrows;
        for (int c : arr)
          if (c != a && c != b) dropped_arrow[c] = 1;
        dropped_face[f] = 1;
      } else {
        composites.emplace_back(a, b);
      }
    }
  }

  QuiverWithFaces r;
  r.vertex_labels = q.vertex_labels;
  std::vector<int> image(q.num_arrows(), -1);
  for (int a = 0; a < q.num_arrows(); ++a) {
    if (dropped_arrow[a]) continue;
    Arrow ar = q.arrows[a];
    ar.triangle = ar.corner = -1;
    if (ar.source == i || ar.target == i) std::swap(ar.source, ar.target);
    image[a] = r.num_arrows();
    r.arrows.push_back(ar);
  }
  for (int f = 0; f < q.num_faces(); ++f) {
    if (dropped_face[f]) continue;
    const auto& arr = q.faces[f].arrows;
    r.faces.push_back({{image[arr[0]], image[arr[1]], image[arr[2]]}, -1});
  }
  for (const auto& [a, b] : composites) {
    const int ab = r.num_arrows();
    r.arrows.push_back({q.arrows[a].source, q.arrows[b].target, -1, -1, {}});
    r.faces.push_back({{ab, image[b], image[a]}, -1});
  }
  assign_arrow_labels(r);
  return r;
}

GradedTriangulation graded_mutate(const GradedTriangulation& gt, int arc, MutationSide side) {
  const Triangulation& t = gt.triangulation;
  if (arc < 0 || arc >= t.num_arcs()) throw Error(ErrorKind::UnknownArc, std::to_string(arc));
  const QuiverWithFaces q = quiver_of(t);
  if (!is_one_degree(q, gt.degree)) throw Error(ErrorKind::NotOneDegree, "", "input is not a 1-degree map");

  const auto [r1, r2] = t.arc_sides(arc);
  auto degree_at = [&](int tri, int corner) -> std::optional<int> {
    if (auto a = q.arrow_at(tri, corner)) return gt.degree[*a];
    return std::nullopt;
  };
  // In a triangle with the arc on side k: the arrow into the arc sits at
  // corner k, the arrow out of it at corner k+1.
  const auto in1 = degree_at(r1.triangle, r1.side), out1 = degree_at(r1.triangle, (r1.side + 1) % 3);
  const auto in2 = degree_at(r2.triangle, r2.side), out2 = degree_at(r2.triangle, (r2.side + 1) % 3);

  GradedTriangulation res{t.flip(arc), {}};
  const QuiverWithFaces q2 = quiver_of(res.triangulation);
  res.degree.assign(q2.num_arrows(), 0);
  const int into_shift = side == MutationSide::Left ? 1 : 0;
  const int out_shift = side == MutationSide::Left ? 0 : 1;
  for (int a = 0; a < q2.num_arrows(); ++a) {
    const Arrow& ar = q2.arrows[a];
    if (ar.triangle != r1.triangle && ar.triangle != r2.triangle) {
      res.degree[a] = gt.degree[*q.arrow_at(ar.triangle, ar.corner)];
      continue;
    }
    // New triangles are [y1, x2, arc] and [y2, x1, arc].
    const bool first = ar.triangle == r1.triangle;
    const auto& in_here = first ? in1 : in2;    // y -> arc, now reversed
    const auto& out_there = first ? out2 : out1;  // arc -> x of the other triangle
    switch (ar.corner) {
      case 0: res.degree[a] = into_shift - *in_here; break;
      case 1: res.degree[a] = *in_here + *out_there; break;
      case 2: res.degree[a] = out_shift - *out_there; break;
    }
  }
  return res;
}

std::optional<FlipSequence> flip_path(const Triangulation& from, const Triangulation& to, int max_depth) {
  if (!same_surface(from.surface(), to.surface()))
    throw Error(ErrorKind::SurfaceMismatch, "", "triangulations of different surfaces");
  const std::vector<int> goal = canonical_code(to);
  struct Node {
    Triangulation t;
    int parent;
    int arc;
    int depth;
  };
  std::vector<Node> nodes{{from, -1, -1, 0}};
  std::map<std::vector<int>, int> seen{{canonical_code(from), 0}};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (canonical_code(nodes[head].t) == goal) {
      FlipSequence seq;
      for (int n = static_cast<int>(head); nodes[n].parent >= 0; n = nodes[n].parent)
        seq.arcs.insert(seq.arcs.begin(), from.arc_label(nodes[n].arc));
      seq.identification = triangulation_isomorphisms(nodes[head].t, to).front();
      return seq;
    }
    if (nodes[head].depth == max_depth) continue;
    for (int a = 0; a < from.num_arcs(); ++a) {
      Triangulation next = nodes[head].t.flip(a);
      auto [it, fresh] = seen.try_emplace(canonical_code(next), static_cast<int>(nodes.size()));
      if (fresh) nodes.push_back({std::move(next), static_cast<int>(head), a, nodes[head].depth + 1});
    }
  }
  return std::nullopt;
}

}  // namespace surfalg
