#include "surfalg/generate.hpp"

#include <functional>

#include "surfalg/error.hpp"

namespace surfalg {

namespace {

struct PolygonEdge {
  std::string label;
  bool arc = false;
  int dir = 1;
};

std::vector<PolygonEdge> polygon_word(int genus, const std::vector<int>& points) {
  std::vector<PolygonEdge> w;
  for (int i = 1; i <= genus; ++i) {
    const std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
    w.push_back({a, true, 1});
    w.push_back({b, true, 1});
    w.push_back({a, true, -1});
    w.push_back({b, true, -1});
  }
  const int b = static_cast<int>(points.size());
  for (int i = 0; i < b; ++i) {
    const std::string e = "e" + std::to_string(i + 1);
    if (i + 1 < b) w.push_back({e, true, 1});
    for (int k = 0; k < points[i]; ++k)
      w.push_back({"s" + std::to_string(i + 1) + "." + std::to_string(k + 1), false, 0});
    if (i + 1 < b) w.push_back({e, true, -1});
  }
  return w;
}

SideSpec edge_spec(const PolygonEdge& e) {
  return e.arc ? SideSpec::arc(e.label, e.dir) : SideSpec::segment(e.label);
}

std::string diagonal(int apex, int j) { return "d" + std::to_string(apex) + "." + std::to_string(j); }

// Fan from polygon vertex `apex`; vertex j is the start of edge j.
std::vector<TriangleSpec> fan_specs(const std::vector<PolygonEdge>& w, int apex) {
  const int n = static_cast<int>(w.size());
  auto edge = [&](int j) { return w[((apex + j) % n + n) % n]; };
  std::vector<TriangleSpec> out;
  for (int m = 1; m + 1 < n; ++m) {
    TriangleSpec t;
    t[0] = m == 1 ? edge_spec(edge(0)) : SideSpec::arc(diagonal(apex, m), 1);
    t[1] = edge_spec(edge(m));
    t[2] = m + 1 == n - 1 ? edge_spec(edge(n - 1)) : SideSpec::arc(diagonal(apex, m + 1), -1);
    out.push_back(t);
  }
  return out;
}

}  // namespace

Triangulation polygon_triangulation(int genus, const std::vector<int>& points) {
  const std::vector<PolygonEdge> w = polygon_word(genus, points);
  return Triangulation(fan_specs(w, 0));
}

std::vector<CurveWord> polygon_generator_words(int genus, const std::vector<int>& points) {
  const std::vector<PolygonEdge> w = polygon_word(genus, points);
  const int n = static_cast<int>(w.size());
  // Triangle and side holding polygon edge j in the fan from vertex 0.
  auto holder = [&](int j) -> std::pair<int, int> {
    if (j == 0) return {0, 0};
    if (j == n - 1) return {n - 3, 2};
    return {j - 1, 1};
  };
  std::vector<CurveWord> out;
  for (int i = 0; i < 2 * genus; ++i) {
    const int edge_index = 4 * (i / 2) + (i % 2);
    const int partner = edge_index + 2;
    const auto [t1, s1] = holder(partner);
    const auto [t2, s2] = holder(edge_index);
    CurveWord word;
    if (t1 == t2) {
      word.push_back({t1, s1, s2});
    } else {
      const int step = t2 > t1 ? 1 : -1;
      const int exit_forward = step > 0 ? 2 : 0, enter_forward = step > 0 ? 0 : 2;
      word.push_back({t1, s1, exit_forward});
      for (int t = t1 + step; t != t2; t += step) word.push_back({t, enter_forward, exit_forward});
      word.push_back({t2, enter_forward, s2});
    }
    out.push_back(word);
  }
  return out;
}

Triangulation random_flips(Triangulation t, int count, std::mt19937_64& rng) {
  for (int k = 0; k < count; ++k) {
    std::uniform_int_distribution<int> pick(0, t.num_arcs() - 1);
    t = t.flip(pick(rng));
  }
  return t;
}

std::vector<Triangulation> disc_triangulations(int p) {
  // Triangles (i, k, j) on vertices i < k < j of the polygon.
  std::function<std::vector<std::vector<std::array<int, 3>>>(int, int)> rec = [&](int i, int j) {
    std::vector<std::vector<std::array<int, 3>>> out;
    if (j - i < 2) return std::vector<std::vector<std::array<int, 3>>>{{}};
    for (int k = i + 1; k < j; ++k)
      for (const auto& left : rec(i, k))
        for (const auto& right : rec(k, j)) {
          auto all = left;
          all.insert(all.end(), right.begin(), right.end());
          all.push_back({i, k, j});
          out.push_back(std::move(all));
        }
    return out;
  };
  auto side = [&](int x, int y) {
    const int lo = std::min(x, y), hi = std::max(x, y);
    if (hi - lo == 1) return SideSpec::segment("s" + std::to_string(lo));
    if (lo == 0 && hi == p - 1) return SideSpec::segment("s" + std::to_string(hi));
    return SideSpec::arc(std::to_string(lo) + "-" + std::to_string(hi), x < y ? 1 : -1);
  };
  std::vector<Triangulation> out;
  for (const auto& tris : rec(0, p - 1)) {
    std::vector<TriangleSpec> specs;
    for (const auto& [i, k, j] : tris) specs.push_back({side(i, k), side(k, j), side(j, i)});
    out.emplace_back(specs);
  }
  return out;
}

SurfaceShape random_shape(std::mt19937_64& rng, int max_genus, int max_b, int max_points) {
  while (true) {
    SurfaceShape s;
    s.genus = std::uniform_int_distribution<int>(0, max_genus)(rng);
    const int b = std::uniform_int_distribution<int>(1, max_b)(rng);
    if (s.genus == 0 && b == 1) continue;
    if (b > max_points) continue;
    const int total = std::uniform_int_distribution<int>(b, max_points)(rng);
    s.points.assign(b, 1);
    for (int k = b; k < total; ++k) ++s.points[std::uniform_int_distribution<int>(0, b - 1)(rng)];
    return s;
  }
}

}  // namespace surfalg
