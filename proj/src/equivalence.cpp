#include "surfalg/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "surfalg/error.hpp"
#include "surfalg/mutation.hpp"

namespace surfalg {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "Equivalent";
    case Verdict::NotEquivalent: return "NotEquivalent";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

struct QuiverShape {
  std::vector<std::array<int, 3>> signature;  // in, out, faces through
  std::vector<std::vector<int>> count;        // arrows u -> v
  std::vector<std::vector<int>> neighbours;
  std::map<std::pair<int, int>, std::vector<int>> parallel;
  std::set<std::array<int, 3>> face_cycles;    // rotated to start at the smallest arrow
};

std::array<int, 3> rotated(std::array<int, 3> f) {
  std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
  return f;
}

QuiverShape shape_of(const QuiverWithFaces& q) {
  QuiverShape s;
  const int n = q.num_vertices();
  s.signature.assign(n, {0, 0, 0});
  s.count.assign(n, std::vector<int>(n, 0));
  s.neighbours.assign(n, {});
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[a];
    ++s.signature[ar.target][0];
    ++s.signature[ar.source][1];
    ++s.count[ar.source][ar.target];
    s.neighbours[ar.source].push_back(ar.target);
    s.neighbours[ar.target].push_back(ar.source);
    s.parallel[{ar.source, ar.target}].push_back(a);
  }
  for (const Face& f : q.faces) {
    for (int a : f.arrows) ++s.signature[q.arrows[a].source][2];
    s.face_cycles.insert(rotated(f.arrows));
  }
  return s;
}

}  // namespace

void for_each_complex_isomorphism(const QuiverWithFaces& q, const QuiverWithFaces& q2,
                                  const std::function<bool(const ComplexIso&)>& visit, const std::vector<int>* fixed) {
  const int n = q.num_vertices();
  if (n != q2.num_vertices() || q.num_arrows() != q2.num_arrows() || q.num_faces() != q2.num_faces()) return;
  const QuiverShape s1 = shape_of(q), s2 = shape_of(q2);

  // Visit vertices so that each one after the first of its component has an
  // already placed neighbour.
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  for (int root = 0; root < n; ++root) {
    if (placed[root]) continue;
    placed[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (int w : s1.neighbours[v])
        if (!placed[w]) {
          placed[w] = 1;
          queue.push_back(w);
        }
    }
  }

  std::vector<int> vmap(n, -1), used(n, 0);
  bool stop = false;

  auto finish = [&]() {
    // Arrows between each ordered pair are matched in every possible way.
    std::vector<std::pair<const std::vector<int>*, const std::vector<int>*>> groups;
    for (const auto& [pair, arrows] : s1.parallel)
      groups.push_back({&arrows, &s2.parallel.at({vmap[pair.first], vmap[pair.second]})});
    ComplexIso iso{vmap, std::vector<int>(q.num_arrows(), -1), {}};
    std::function<void(std::size_t)> match = [&](std::size_t g) {
      if (stop) return;
      if (g == groups.size()) {
        std::vector<int> fmap;
        for (const Face& f : q.faces) {
          const std::array<int, 3> img = rotated({iso.arrow_map[f.arrows[0]], iso.arrow_map[f.arrows[1]],
                                                  iso.arrow_map[f.arrows[2]]});
          if (!s2.face_cycles.count(img)) return;
          for (int k = 0; k < q2.num_faces(); ++k)
            if (rotated(q2.faces[k].arrows) == img) fmap.push_back(k);
        }
        iso.face_map = fmap;
        if (!visit(iso)) stop = true;
        return;
      }
      std::vector<int> targets = *groups[g].second;
      std::sort(targets.begin(), targets.end());
      do {
        for (std::size_t k = 0; k < targets.size(); ++k) iso.arrow_map[(*groups[g].first)[k]] = targets[k];
        match(g + 1);
      } while (!stop && std::next_permutation(targets.begin(), targets.end()));
    };
    match(0);
  };

  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (stop) return;
    if (k == order.size()) {
      finish();
      return;
    }
    const int v = order[k];
    for (int w = 0; w < n && !stop; ++w) {
      if (used[w] || s1.signature[v] != s2.signature[w]) continue;
      if (fixed && (*fixed)[v] != w) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const int u = order[j];
        ok = s1.count[v][u] == s2.count[w][vmap[u]] && s1.count[u][v] == s2.count[vmap[u]][w];
      }
      if (!ok) continue;
      vmap[v] = w;
      used[w] = 1;
      assign(k + 1);
      used[w] = 0;
      vmap[v] = -1;
    }
  };
  assign(0);
}

std::vector<ComplexIso> complex_isomorphisms(const QuiverWithFaces& q, const QuiverWithFaces& q2, std::size_t limit) {
  std::vector<ComplexIso> out;
  for_each_complex_isomorphism(q, q2, [&](const ComplexIso& iso) {
    out.push_back(iso);
    return limit == 0 || out.size() < limit;
  });
  return out;
}

EquivalenceVerdict derived_equivalent_genus0(const CutSurface& a, const CutSurface& b) {
  const Triangulation& ta = *a.triangulation;
  const Triangulation& tb = *b.triangulation;
  if (ta.surface().genus != 0 || tb.surface().genus != 0)
    throw Error(ErrorKind::GenusNonzero, "", "the complete decision needs genus 0");
  if (!same_surface(ta.surface(), tb.surface()))
    throw Error(ErrorKind::SurfaceMismatch, "", "triangulations of different surfaces");
  const std::vector<long long> wa = boundary_weight(ta, quiver_of(ta), a.degree);
  const std::vector<long long> wb = boundary_weight(tb, quiver_of(tb), b.degree);
  const auto& pa = ta.surface().points_per_component;
  const auto& pb = tb.surface().points_per_component;

  EquivalenceVerdict v;
  std::vector<char> taken(pb.size(), 0);
  for (std::size_t i = 0; i < pa.size(); ++i) {
    int match = -1;
    for (std::size_t j = 0; j < pb.size() && match < 0; ++j)
      if (!taken[j] && pb[j] == pa[i] && wb[j] == wa[i]) match = static_cast<int>(j);
    if (match < 0) {
      v.verdict = Verdict::NotEquivalent;
      v.sigma.clear();
      return v;
    }
    taken[match] = 1;
    v.sigma.push_back(match);
  }
  v.verdict = Verdict::Equivalent;
  return v;
}

namespace {

struct CanonicalState {
  std::vector<int> code;
  std::vector<int> degrees;
  bool operator<(const CanonicalState& o) const { return std::tie(code, degrees) < std::tie(o.code, o.degrees); }
  bool operator==(const CanonicalState& o) const { return code == o.code && degrees == o.degrees; }
};

// Degrees listed in a canonical labeling, shifted by a coboundary so that
// they vanish on a spanning forest chosen in that labeling; minimised over
// all labelings attaining the canonical code.
CanonicalState canonical_state(const Triangulation& t, const QuiverWithFaces& q, const DegreeMap& d) {
  const CanonicalForm form = canonical_form(t);
  CanonicalState best{form.code, {}};
  const int n = t.num_triangles();
  for (std::size_t k = 0; k < form.orders.size(); ++k) {
    std::vector<int> arrows, arcs(t.num_arcs(), -1);
    int next_arc = 0;
    for (int id = 0; id < n; ++id) {
      const int tri = form.orders[k][id];
      for (int j = 0; j < 3; ++j) {
        const int side = (form.rotations[k][tri] + j) % 3;
        const Side& s = t.sides(tri)[side];
        if (s.is_arc() && arcs[s.index] < 0) arcs[s.index] = next_arc++;
        if (auto a = q.arrow_at(tri, side)) arrows.push_back(*a);
      }
    }
    std::vector<long long> r(t.num_arcs(), 0);
    std::vector<char> reached(t.num_arcs(), 0);
    // Grow the forest by the first arrow, in canonical order, touching it.
    bool grew = true;
    std::vector<int> roots(t.num_arcs());
    for (int v = 0; v < t.num_arcs(); ++v) roots[arcs[v]] = v;
    for (int root : roots) {
      if (reached[root]) continue;
      reached[root] = 1;
      grew = true;
      while (grew) {
        grew = false;
        for (int a : arrows) {
          const Arrow& ar = q.arrows[a];
          if (reached[ar.source] == reached[ar.target]) continue;
          if (reached[ar.source])
            r[ar.target] = r[ar.source] - d[a];
          else
            r[ar.source] = r[ar.target] + d[a];
          reached[ar.source] = reached[ar.target] = 1;
          grew = true;
        }
      }
    }
    std::vector<int> degrees;
    for (int a : arrows)
      degrees.push_back(d[a] + static_cast<int>(r[q.arrows[a].target] - r[q.arrows[a].source]));
    if (k == 0 || degrees < best.degrees) best.degrees = std::move(degrees);
  }
  return best;
}

DegreeMap transport(const QuiverWithFaces& from_q, const DegreeMap& d, const QuiverWithFaces& to_q,
                    const TriangulationIso& iso) {
  DegreeMap out(to_q.num_arrows(), 0);
  for (int a = 0; a < from_q.num_arrows(); ++a) {
    const SideRef img = iso.map({from_q.arrows[a].triangle, from_q.arrows[a].corner});
    out[*to_q.arrow_at(img.triangle, img.side)] = d[a];
  }
  return out;
}

}  // namespace

bool verify_certificate(const CutSurface& a, const CutSurface& b, const Certificate& cert) {
  GradedTriangulation gt{*b.triangulation, b.degree};
  for (const std::string& label : cert.flips)
    gt = graded_mutate(gt, gt.triangulation.arc_index(label), MutationSide::Left);
  const Triangulation& ta = *a.triangulation;
  const Triangulation& end = gt.triangulation;
  const auto n = static_cast<std::size_t>(end.num_triangles());
  if (cert.iso.triangle_map.size() != n || cert.iso.shift.size() != n) return false;
  if (end.num_triangles() != ta.num_triangles() || cert.witness.size() != static_cast<std::size_t>(ta.num_arcs()))
    return false;
  std::vector<char> hit(n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    const int img = cert.iso.triangle_map[t];
    if (img < 0 || img >= static_cast<int>(n) || hit[img] || cert.iso.shift[t] < 0 || cert.iso.shift[t] > 2) return false;
    hit[img] = 1;
  }
  // The map must carry the gluing of `end` onto the gluing of `ta`.
  for (int t = 0; t < end.num_triangles(); ++t)
    for (int k = 0; k < 3; ++k) {
      const Side& s = end.sides(t)[k];
      const SideRef img = cert.iso.map({t, k});
      if (s.is_arc() != ta.side(img).is_arc()) return false;
      if (s.is_arc() && !(cert.iso.map(end.glued({t, k})) == ta.glued(img))) return false;
    }
  const QuiverWithFaces qa = quiver_of(ta);
  const DegreeMap moved = transport(quiver_of(end), gt.degree, qa, cert.iso);
  return add_coboundary(qa, moved, cert.witness) == a.degree;
}

EquivalenceVerdict equivalence_certificate(const CutSurface& a, const CutSurface& b,
                                           const std::vector<CurveWord>& interior_generators, int budget) {
  const Triangulation& ta = *a.triangulation;
  const Triangulation& tb = *b.triangulation;
  if (!same_surface(ta.surface(), tb.surface()))
    throw Error(ErrorKind::SurfaceMismatch, "", "triangulations of different surfaces");
  const QuiverWithFaces qa = quiver_of(ta);
  generator_system(ta, qa, interior_generators);

  EquivalenceVerdict decision;
  if (ta.surface().genus == 0) {
    decision = derived_equivalent_genus0(a, b);
    if (decision.verdict == Verdict::NotEquivalent) return decision;
  }

  const CanonicalState goal = canonical_state(ta, qa, a.degree);
  struct Node {
    GradedTriangulation gt;
    int parent;
    int arc;
  };
  std::vector<Node> nodes{{{tb, b.degree}, -1, -1}};
  std::set<CanonicalState> seen{canonical_state(tb, quiver_of(tb), b.degree)};
  EquivalenceVerdict out = decision;
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    out.states_explored = static_cast<int>(head) + 1;
    const GradedTriangulation cur = nodes[head].gt;
    const QuiverWithFaces qc = quiver_of(cur.triangulation);
    if (canonical_state(cur.triangulation, qc, cur.degree) == goal) {
      for (const TriangulationIso& iso : triangulation_isomorphisms(cur.triangulation, ta)) {
        const auto r = coboundary_witness(qa, a.degree, transport(qc, cur.degree, qa, iso));
        if (!r) continue;
        Certificate cert;
        for (int k = static_cast<int>(head); nodes[k].parent >= 0; k = nodes[k].parent)
          cert.flips.insert(cert.flips.begin(), tb.arc_label(nodes[k].arc));
        cert.iso = iso;
        cert.witness = *r;
        out.verdict = Verdict::Equivalent;
        out.certificate = std::move(cert);
        return out;
      }
      throw Error(ErrorKind::InvariantViolation, "", "canonical states agree but no isomorphism carries the grading");
    }
    if (static_cast<int>(nodes.size()) >= budget) continue;
    for (int arc = 0; arc < tb.num_arcs(); ++arc) {
      GradedTriangulation next = graded_mutate(cur, arc, MutationSide::Left);
      if (!seen.insert(canonical_state(next.triangulation, quiver_of(next.triangulation), next.degree)).second) continue;
      nodes.push_back({std::move(next), static_cast<int>(head), arc});
      if (static_cast<int>(nodes.size()) >= budget) break;
    }
  }
  if (ta.surface().genus == 0) return decision;
  out.verdict = Verdict::Unknown;
  return out;
}

std::vector<ARComponent> ar_report(const Triangulation& t, const QuiverWithFaces& q, const DegreeMap& d) {
  if (!is_admissible_cut(q, d)) throw Error(ErrorKind::NotAdmissible, "", "degree map is not an admissible cut");
  const std::vector<long long> w = boundary_weight(t, q, d);
  std::vector<ARComponent> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int p = t.surface().points_per_component[i];
    const int wi = static_cast<int>(w[i]);
    if (wi == 0)
      out.push_back({true, p, 0, 0, 0});
    else
      out.push_back({false, 0, std::abs(wi), wi, p + wi});
  }
  return out;
}

}  // namespace surfalg
