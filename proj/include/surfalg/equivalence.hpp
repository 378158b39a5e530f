#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "surfalg/curves.hpp"
#include "surfalg/quiver.hpp"
#include "surfalg/triangulation.hpp"

namespace surfalg {

struct ComplexIso {
  std::vector<int> vertex_map;
  std::vector<int> arrow_map;
  std::vector<int> face_map;
};

/// Calls `visit` on each isomorphism of quivers with faces (face cycles mapped
/// to face cycles with their cyclic order) until it returns false. With
/// `fixed`, only isomorphisms extending that vertex map are produced.
void for_each_complex_isomorphism(const QuiverWithFaces& q, const QuiverWithFaces& q2,
                                  const std::function<bool(const ComplexIso&)>& visit,
                                  const std::vector<int>* fixed = nullptr);
std::vector<ComplexIso> complex_isomorphisms(const QuiverWithFaces& q, const QuiverWithFaces& q2,
                                             std::size_t limit = 0);

/// A triangulation with a degree map on its quiver.
struct CutSurface {
  const Triangulation* triangulation;
  DegreeMap degree;
};

enum class Verdict { Equivalent, NotEquivalent, Unknown };
std::string_view to_string(Verdict v);

/// Left graded mutation at `flips` (labels of the second triangulation) turns
/// it into a triangulation glued like the first via `iso`; the transported
/// degree map plus the coboundary of `witness` is the first degree map.
struct Certificate {
  std::vector<std::string> flips;
  TriangulationIso iso;
  std::vector<long long> witness;
};

struct EquivalenceVerdict {
  Verdict verdict = Verdict::Unknown;
  /// sigma[i]: boundary component of the second surface matched with B_i.
  std::vector<int> sigma;
  std::optional<Certificate> certificate;
  int states_explored = 0;
};

/// Complete decision in genus 0. Throws GenusNonzero, SurfaceMismatch, DiscSurface.
EquivalenceVerdict derived_equivalent_genus0(const CutSurface& a, const CutSurface& b);

/// Search over Left graded mutations of b for a certificate, exploring at most
/// `budget` graded triangulations up to isomorphism and grading shift. Throws
/// SurfaceMismatch, GeneratorCountMismatch.
EquivalenceVerdict equivalence_certificate(const CutSurface& a, const CutSurface& b,
                                           const std::vector<CurveWord>& interior_generators, int budget);

bool verify_certificate(const CutSurface& a, const CutSurface& b, const Certificate& cert);

struct ARComponent {
  bool tube = true;
  int rank = 0;   // tube rank p_i
  int count = 0;  // |w_i| families otherwise
  int shift = 0;  // M[w_i] = tau^{tau_power} M
  int tau_power = 0;
};

/// Throws DiscSurface, NotAdmissible.
std::vector<ARComponent> ar_report(const Triangulation& t, const QuiverWithFaces& q, const DegreeMap& d);

}  // namespace surfalg
