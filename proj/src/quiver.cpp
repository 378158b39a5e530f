#include "surfalg/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "surfalg/error.hpp"

namespace surfalg {

std::optional<int> QuiverWithFaces::find_vertex(std::string_view label) const {
  for (int v = 0; v < num_vertices(); ++v)
    if (vertex_labels[v] == label) return v;
  return std::nullopt;
}

std::optional<int> QuiverWithFaces::find_arrow(std::string_view label) const {
  for (int a = 0; a < num_arrows(); ++a)
    if (arrows[a].label == label) return a;
  return std::nullopt;
}

std::optional<int> QuiverWithFaces::arrow_at(int triangle, int corner) const {
  for (int a = 0; a < num_arrows(); ++a)
    if (arrows[a].triangle == triangle && arrows[a].corner == corner) return a;
  return std::nullopt;
}

std::vector<int> QuiverWithFaces::face_of_arrows() const {
  std::vector<int> out(arrows.size(), -1);
  for (int f = 0; f < num_faces(); ++f) {
    for (int a : faces[f].arrows) {
      if (out[a] >= 0) throw Error(ErrorKind::ArrowInTwoFaces, arrows[a].label);
      out[a] = f;
    }
  }
  return out;
}

void assign_arrow_labels(QuiverWithFaces& q) {
  std::map<std::pair<int, int>, int> seen;
  for (Arrow& a : q.arrows) {
    const int k = ++seen[{a.source, a.target}];
    a.label = q.vertex_labels[a.source] + ">" + q.vertex_labels[a.target] + "#" + std::to_string(k);
  }
}

QuiverWithFaces quiver_of(const Triangulation& t) {
  QuiverWithFaces q;
  q.vertex_labels = t.arc_labels();
  for (int tri = 0; tri < t.num_triangles(); ++tri) {
    const TriangleSides& s = t.sides(tri);
    std::array<int, 3> at{-1, -1, -1};
    for (int v = 0; v < 3; ++v) {
      const Side& in = s[(v + 2) % 3];
      const Side& out = s[v];
      if (!in.is_arc() || !out.is_arc()) continue;
      at[v] = q.num_arrows();
      q.arrows.push_back({in.index, out.index, tri, v, {}});
    }
    if (t.is_internal(tri)) q.faces.push_back({{at[1], at[2], at[0]}, tri});
  }
  assign_arrow_labels(q);
  return q;
}

BoundaryComplex boundary_complex(const QuiverWithFaces& q) {
  BoundaryComplex c;
  c.d1.assign(q.num_arrows(), std::vector<long long>(q.num_faces(), 0));
  for (int f = 0; f < q.num_faces(); ++f)
    for (int a : q.faces[f].arrows) c.d1[a][f] += 1;
  c.d0.assign(q.num_vertices(), std::vector<long long>(q.num_arrows(), 0));
  for (int a = 0; a < q.num_arrows(); ++a) {
    c.d0[q.arrows[a].target][a] += 1;
    c.d0[q.arrows[a].source][a] -= 1;
  }
  return c;
}

int h1_rank(const BoundaryComplex& c) {
  const int arrows = static_cast<int>(c.d1.size());
  return arrows - integer_rank(c.d0) - integer_rank(c.d1);
}

bool is_one_degree(const QuiverWithFaces& q, const DegreeMap& d) {
  if (static_cast<int>(d.size()) != q.num_arrows()) return false;
  for (const Face& f : q.faces)
    if (d[f.arrows[0]] + d[f.arrows[1]] + d[f.arrows[2]] != 1) return false;
  return true;
}

bool is_admissible_cut(const QuiverWithFaces& q, const DegreeMap& d) {
  if (!is_one_degree(q, d)) return false;
  const std::vector<int> face = q.face_of_arrows();
  for (int a = 0; a < q.num_arrows(); ++a) {
    if (d[a] != 0 && d[a] != 1) return false;
    if (d[a] == 1 && face[a] < 0) return false;
  }
  return true;
}

std::vector<DegreeMap> enumerate_admissible_cuts(const QuiverWithFaces& q) {
  q.face_of_arrows();
  std::vector<DegreeMap> out;
  DegreeMap d(q.num_arrows(), 0);
  std::function<void(int)> rec = [&](int f) {
    if (f == q.num_faces()) {
      out.push_back(d);
      return;
    }
    for (int a : q.faces[f].arrows) {
      d[a] = 1;
      rec(f + 1);
      d[a] = 0;
    }
  };
  rec(0);
  return out;
}

bool GentlePresentation::is_relation(int a, int b) const {
  return std::find(relations.begin(), relations.end(), std::pair{a, b}) != relations.end();
}

namespace {

GentlePresentation bare_presentation(const QuiverWithFaces& q) {
  GentlePresentation p;
  p.vertex_labels = q.vertex_labels;
  return p;
}

}  // namespace

GentlePresentation jacobian_presentation(const QuiverWithFaces& q) {
  GentlePresentation p = bare_presentation(q);
  for (const Arrow& a : q.arrows) p.arrows.push_back({a.source, a.target, a.label});
  for (const Face& f : q.faces)
    for (int k = 0; k < 3; ++k) p.relations.emplace_back(f.arrows[k], f.arrows[(k + 1) % 3]);
  std::sort(p.relations.begin(), p.relations.end());
  return p;
}

GentlePresentation surface_algebra_presentation(const QuiverWithFaces& q, const DegreeMap& d) {
  if (!is_admissible_cut(q, d)) throw Error(ErrorKind::NotAdmissible, "", "degree map is not an admissible cut");
  GentlePresentation p = bare_presentation(q);
  std::vector<int> kept(q.num_arrows(), -1);
  for (int a = 0; a < q.num_arrows(); ++a) {
    if (d[a] != 0) continue;
    kept[a] = p.num_arrows();
    p.arrows.push_back({q.arrows[a].source, q.arrows[a].target, q.arrows[a].label});
  }
  for (const Face& f : q.faces) {
    for (int k = 0; k < 3; ++k) {
      if (d[f.arrows[k]] != 1) continue;
      p.relations.emplace_back(kept[f.arrows[(k + 1) % 3]], kept[f.arrows[(k + 2) % 3]]);
    }
  }
  std::sort(p.relations.begin(), p.relations.end());
  return p;
}

GentleCheck check_gentle(const GentlePresentation& p) {
  GentleCheck out;
  auto problem = [&](std::string msg) {
    out.gentle = false;
    out.problems.push_back(std::move(msg));
  };
  std::vector<int> in(p.num_vertices(), 0), outd(p.num_vertices(), 0);
  for (const auto& a : p.arrows) {
    ++outd[a.source];
    ++in[a.target];
  }
  for (int v = 0; v < p.num_vertices(); ++v) {
    if (in[v] > 2) problem("vertex " + p.vertex_labels[v] + " has " + std::to_string(in[v]) + " incoming arrows");
    if (outd[v] > 2) problem("vertex " + p.vertex_labels[v] + " has " + std::to_string(outd[v]) + " outgoing arrows");
  }
  for (const auto& [a, b] : p.relations) {
    if (p.arrows[a].target != p.arrows[b].source)
      problem("relation " + p.arrows[a].label + " " + p.arrows[b].label + " is not a path");
  }
  for (int a = 0; a < p.num_arrows(); ++a) {
    int rel_after = 0, free_after = 0, rel_before = 0, free_before = 0;
    for (int b = 0; b < p.num_arrows(); ++b) {
      if (p.arrows[a].target == p.arrows[b].source) ++(p.is_relation(a, b) ? rel_after : free_after);
      if (p.arrows[b].target == p.arrows[a].source) ++(p.is_relation(b, a) ? rel_before : free_before);
    }
    const std::string& l = p.arrows[a].label;
    if (rel_after > 1) problem("arrow " + l + " starts two relations");
    if (free_after > 1) problem("arrow " + l + " has two nonzero continuations");
    if (rel_before > 1) problem("arrow " + l + " ends two relations");
    if (free_before > 1) problem("arrow " + l + " has two nonzero predecessors");
  }
  return out;
}

}  // namespace surfalg
