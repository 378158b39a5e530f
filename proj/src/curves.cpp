#include "surfalg/curves.hpp"

#include <deque>

#include "surfalg/error.hpp"

namespace surfalg {

namespace {

void require_not_disc(const Triangulation& t) {
  if (t.surface().is_disc()) throw Error(ErrorKind::DiscSurface, "", "the surface is a disc");
}

}  // namespace

CurveClass boundary_curve_class(const Triangulation& t, const QuiverWithFaces& q, int i) {
  require_not_disc(t);
  CurveClass c(q.num_arrows(), 0);
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[a];
    const int v = ar.corner, tri = ar.triangle;
    const bool sides_free =
        !t.side_is_boundary_homotopic(tri, (v + 2) % 3) && !t.side_is_boundary_homotopic(tri, v);
    if (!sides_free) continue;
    if (t.component_of_point(t.point_at(tri, v)) == i) c[a] += 1;
    const int opposite = (v + 1) % 3;
    if (t.side_is_boundary_homotopic(tri, opposite) && t.boundary_component_of_side(tri, opposite) == i) c[a] -= 1;
  }
  return c;
}

CurveClass curve_class_of_word(const Triangulation& t, const QuiverWithFaces& q, const CurveWord& w) {
  CurveClass c(q.num_arrows(), 0);
  const int n = static_cast<int>(w.size());
  for (int k = 0; k < n; ++k) {
    const CornerTraversal& x = w[k];
    const std::string where = std::to_string(k);
    if (x.triangle < 0 || x.triangle >= t.num_triangles() || x.in < 0 || x.in > 2 || x.out < 0 || x.out > 2)
      throw Error(ErrorKind::InvalidWord, where, "traversal out of range");
    if (x.in == x.out) throw Error(ErrorKind::InvalidWord, where, "traversal leaves through the side it entered by");
    if (!t.sides(x.triangle)[x.out].is_arc() || !t.sides(x.triangle)[x.in].is_arc())
      throw Error(ErrorKind::InvalidWord, where, "traversal crosses a boundary segment");
    const CornerTraversal& next = w[(k + 1) % n];
    if (!(t.glued({x.triangle, x.out}) == SideRef{next.triangle, next.in}))
      throw Error(ErrorKind::InvalidWord, where, "consecutive traversals do not share the crossed arc");
    // Sides u and u+1 meet at corner u+1; the arrow there runs from side u.
    const bool forward = (x.in + 1) % 3 == x.out;
    const int corner = forward ? x.out : x.in;
    c[*q.arrow_at(x.triangle, corner)] += forward ? 1 : -1;
  }
  return c;
}

CurveWord reversed(const CurveWord& w) {
  CurveWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->triangle, it->out, it->in});
  return out;
}

GeneratorSystem generator_system(const Triangulation& t, const QuiverWithFaces& q,
                                 const std::vector<CurveWord>& interior) {
  require_not_disc(t);
  const int g = t.surface().genus;
  if (static_cast<int>(interior.size()) != 2 * g)
    throw Error(ErrorKind::GeneratorCountMismatch, "",
                "expected " + std::to_string(2 * g) + " interior generators, got " + std::to_string(interior.size()));
  GeneratorSystem eps;
  for (const CurveWord& w : interior) eps.classes.push_back(curve_class_of_word(t, q, w));
  for (int i = 0; i < t.surface().num_components(); ++i) eps.classes.push_back(boundary_curve_class(t, q, i));
  return eps;
}

long long evaluate(const DegreeMap& d, const CurveClass& c) {
  long long s = 0;
  for (std::size_t a = 0; a < d.size(); ++a) s += static_cast<long long>(d[a]) * c[a];
  return s;
}

std::vector<long long> weight(const Triangulation& t, const QuiverWithFaces& q, const DegreeMap& d,
                              const GeneratorSystem& eps) {
  require_not_disc(t);
  if (!is_one_degree(q, d)) throw Error(ErrorKind::NotOneDegree, "", "degree map does not sum to 1 on every face");
  const auto& s = t.surface();
  if (static_cast<int>(eps.classes.size()) != 2 * s.genus + s.num_components())
    throw Error(ErrorKind::GeneratorCountMismatch, "", "generator system has the wrong length");
  std::vector<long long> w;
  for (const CurveClass& c : eps.classes) w.push_back(evaluate(d, c));
  return w;
}

std::vector<long long> boundary_weight(const Triangulation& t, const QuiverWithFaces& q, const DegreeMap& d) {
  require_not_disc(t);
  if (!is_one_degree(q, d)) throw Error(ErrorKind::NotOneDegree, "", "degree map does not sum to 1 on every face");
  std::vector<long long> w;
  for (int i = 0; i < t.surface().num_components(); ++i) w.push_back(evaluate(d, boundary_curve_class(t, q, i)));
  return w;
}

std::optional<std::vector<long long>> coboundary_witness(const QuiverWithFaces& q, const DegreeMap& d,
                                                         const DegreeMap& d2) {
  if (static_cast<int>(d.size()) != q.num_arrows() || d.size() != d2.size())
    throw Error(ErrorKind::QuiverMismatch, "", "degree maps do not match the quiver");
  const int n = q.num_vertices();
  std::vector<std::vector<int>> incident(n);
  for (int a = 0; a < q.num_arrows(); ++a) {
    incident[q.arrows[a].source].push_back(a);
    incident[q.arrows[a].target].push_back(a);
  }
  std::vector<long long> r(n, 0);
  std::vector<char> done(n, 0);
  for (int root = 0; root < n; ++root) {
    if (done[root]) continue;
    done[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int a : incident[v]) {
        const Arrow& ar = q.arrows[a];
        const long long diff = static_cast<long long>(d[a]) - d2[a];
        const int other = ar.source == v ? ar.target : ar.source;
        if (done[other]) continue;
        r[other] = ar.source == v ? r[v] + diff : r[v] - diff;
        done[other] = 1;
        queue.push_back(other);
      }
    }
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[a];
    if (static_cast<long long>(d[a]) - d2[a] != r[ar.target] - r[ar.source]) return std::nullopt;
  }
  return r;
}

DegreeMap add_coboundary(const QuiverWithFaces& q, const DegreeMap& d, const std::vector<long long>& r) {
  DegreeMap out = d;
  for (int a = 0; a < q.num_arrows(); ++a)
    out[a] += static_cast<int>(r[q.arrows[a].target] - r[q.arrows[a].source]);
  return out;
}

}  // namespace surfalg
