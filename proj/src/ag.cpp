#include "surfalg/ag.hpp"

#include "surfalg/error.hpp"

namespace surfalg {

std::string to_string(const AGInvariant& ag) {
  std::string s = "{";
  for (const auto& [pair, count] : ag) {
    for (int k = 0; k < count; ++k) {
      if (s.size() > 1) s += ", ";
      s += "(" + std::to_string(pair.first) + "," + std::to_string(pair.second) + ")";
    }
  }
  return s + "}";
}

std::vector<int> local_cuts(const Triangulation& t, const QuiverWithFaces& q, const DegreeMap& d) {
  if (!is_admissible_cut(q, d)) throw Error(ErrorKind::NotAdmissible, "", "degree map is not an admissible cut");
  std::vector<int> l(t.surface().num_components(), 0);
  for (int a = 0; a < q.num_arrows(); ++a)
    if (d[a] == 1) ++l[t.component_of_point(t.point_at(q.arrows[a].triangle, q.arrows[a].corner))];
  return l;
}

AGInvariant ag_formula(const Triangulation& t, const QuiverWithFaces& q, const DegreeMap& d) {
  if (t.surface().is_disc()) throw Error(ErrorKind::DiscSurface, "", "the surface is a disc");
  const std::vector<int> l = local_cuts(t, q, d);
  const BoundaryStatistics st = t.boundary_statistics();
  AGInvariant ag;
  for (std::size_t i = 0; i < l.size(); ++i) ++ag[{st.incident[i] + l[i], st.segments[i] + 2 * l[i]}];
  return ag;
}

AGInvariant ag_weights(const Triangulation& t, const std::vector<long long>& w) {
  if (t.surface().is_disc()) throw Error(ErrorKind::DiscSurface, "", "the surface is a disc");
  const auto& p = t.surface().points_per_component;
  AGInvariant ag;
  for (std::size_t i = 0; i < p.size(); ++i)
    ++ag[{p[i] + static_cast<int>(w[i]), p[i] + 2 * static_cast<int>(w[i])}];
  return ag;
}

namespace {

struct Thread {
  int start = -1;
  int end = -1;
  int length = 0;
  int sigma = 0;
  int eps = 0;
};

}  // namespace

AGInvariant ag_direct(const GentlePresentation& p) {
  const GentleCheck check = check_gentle(p);
  if (!check.gentle) throw Error(ErrorKind::NotGentle, "", check.problems.front());
  const int n = p.num_arrows(), nv = p.num_vertices();

  std::vector<int> free_next(n, -1), free_prev(n, -1), rel_next(n, -1), rel_prev(n, -1);
  std::vector<std::vector<int>> in(nv), out(nv);
  for (int a = 0; a < n; ++a) {
    in[p.arrows[a].target].push_back(a);
    out[p.arrows[a].source].push_back(a);
  }
  for (int a = 0; a < n; ++a) {
    for (int b : out[p.arrows[a].target]) {
      if (p.is_relation(a, b)) {
        rel_next[a] = b;
        rel_prev[b] = a;
      } else {
        free_next[a] = b;
        free_prev[b] = a;
      }
    }
  }

  // Signs separate the two arrows at each end of a vertex; a nonzero
  // composite flips the sign, a relation keeps it.
  std::vector<int> eps(n, 0), sigma(n, 0);
  for (int v = 0; v < nv; ++v) {
    for (std::size_t k = 0; k < in[v].size(); ++k) eps[in[v][k]] = k == 0 ? 1 : -1;
    for (int g : out[v]) {
      if (free_prev[g] >= 0)
        sigma[g] = -eps[free_prev[g]];
      else if (rel_prev[g] >= 0)
        sigma[g] = eps[rel_prev[g]];
    }
    for (int g : out[v]) {
      if (sigma[g] != 0) continue;
      int other = 0;
      for (int h : out[v])
        if (h != g) other = sigma[h];
      sigma[g] = other == 0 ? 1 : -other;
    }
    if (out[v].size() == 2 && sigma[out[v][0]] == sigma[out[v][1]])
      throw Error(ErrorKind::NotGentle, p.vertex_labels[v], "no consistent sign choice");
  }

  std::vector<Thread> permitted, forbidden;
  auto collect = [&](const std::vector<int>& next, const std::vector<int>& prev, std::vector<Thread>& threads) {
    std::vector<char> used(n, 0);
    for (int a = 0; a < n; ++a) {
      if (prev[a] >= 0) continue;
      Thread th{p.arrows[a].source, -1, 0, sigma[a], 0};
      int last = a;
      for (int b = a; b >= 0; b = next[b]) {
        used[b] = 1;
        ++th.length;
        last = b;
      }
      th.end = p.arrows[last].target;
      th.eps = eps[last];
      threads.push_back(th);
    }
    return used;
  };
  const std::vector<char> in_permitted = collect(free_next, free_prev, permitted);
  for (int a = 0; a < n; ++a)
    if (!in_permitted[a]) throw Error(ErrorKind::NotGentle, p.arrows[a].label, "oriented cycle without relations");
  const std::vector<char> in_forbidden = collect(rel_next, rel_prev, forbidden);

  for (int v = 0; v < nv; ++v) {
    if (in[v].size() > 1 || out[v].size() > 1) continue;
    const bool both = in[v].size() == 1 && out[v].size() == 1;
    const bool rel = both && p.is_relation(in[v][0], out[v][0]);
    auto trivial = [&](int fallback) {
      Thread th{v, v, 0, fallback, fallback};
      if (in[v].size() == 1) th.eps = -eps[in[v][0]];
      if (out[v].size() == 1) th.sigma = -sigma[out[v][0]];
      return th;
    };
    if (!both || !rel) permitted.push_back(trivial(1));
    if (!both || rel) forbidden.push_back(trivial(-1));
  }

  auto key = [](int vertex, int sign) { return 2 * vertex + (sign > 0 ? 1 : 0); };
  std::vector<int> forbidden_ending(2 * nv, -1), permitted_starting(2 * nv, -1);
  for (std::size_t k = 0; k < forbidden.size(); ++k) {
    int& slot = forbidden_ending[key(forbidden[k].end, forbidden[k].eps)];
    if (slot >= 0) throw Error(ErrorKind::InvariantViolation, "", "two forbidden threads share an end");
    slot = static_cast<int>(k);
  }
  for (std::size_t k = 0; k < permitted.size(); ++k) {
    int& slot = permitted_starting[key(permitted[k].start, permitted[k].sigma)];
    if (slot >= 0) throw Error(ErrorKind::InvariantViolation, "", "two permitted threads share a start");
    slot = static_cast<int>(k);
  }

  AGInvariant ag;
  std::vector<char> visited(permitted.size(), 0);
  for (std::size_t h0 = 0; h0 < permitted.size(); ++h0) {
    if (visited[h0]) continue;
    int steps = 0, arrows = 0;
    int h = static_cast<int>(h0);
    do {
      visited[h] = 1;
      const int f = forbidden_ending[key(permitted[h].end, -permitted[h].eps)];
      if (f < 0) throw Error(ErrorKind::InvariantViolation, "", "thread walk is stuck");
      arrows += forbidden[f].length;
      h = permitted_starting[key(forbidden[f].start, -forbidden[f].sigma)];
      if (h < 0 || (visited[h] && h != static_cast<int>(h0)))
        throw Error(ErrorKind::InvariantViolation, "", "thread walk is stuck");
      ++steps;
    } while (h != static_cast<int>(h0));
    ++ag[{steps, arrows}];
  }

  // Oriented cycles with every consecutive pair a relation.
  std::vector<char> seen = in_forbidden;
  for (int a = 0; a < n; ++a) {
    if (seen[a]) continue;
    int length = 0;
    for (int b = a; !seen[b]; b = rel_next[b]) {
      seen[b] = 1;
      ++length;
    }
    ++ag[{0, length}];
  }
  return ag;
}

}  // namespace surfalg
