#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "surfalg/ag.hpp"
#include "surfalg/curves.hpp"
#include "surfalg/equivalence.hpp"
#include "surfalg/fixtures.hpp"

namespace surfalg::io {

using Json = nlohmann::ordered_json;

inline constexpr int kFormat = 1;

/// Triangulation document:
///   {"format": 1, "name": ..., "triangles": [[side, side, side], ...],
///    "cuts": {"d0": {"arrow label": 1, ...}, ...}}
/// with side = {"arc": label, "dir": 1 | -1} or {"bnd": label}. "name" and
/// "cuts" are optional. Throws Malformed.
Fixture parse_triangulation(const Json& doc);
Json triangulation_doc(const Triangulation& t, const std::string& name = {},
                       const std::vector<NamedDegrees>& cuts = {});

/// Degree sidecar: {"format": 1, "degrees": {"arrow label": integer}}. Arrows
/// that are not listed have degree 0.
NamedDegrees parse_degrees(const Json& doc);
Json degrees_doc(const QuiverWithFaces& q, const DegreeMap& d);
NamedDegrees named(const QuiverWithFaces& q, const DegreeMap& d, std::string name = {});
/// Throws UnknownArrow.
DegreeMap resolve(const QuiverWithFaces& q, const NamedDegrees& d);

/// Curve words: {"format": 1, "words": [[{"triangle": t, "in": k, "out": k}, ...], ...]}.
std::vector<CurveWord> parse_words(const Json& doc);
Json words_doc(const std::vector<CurveWord>& words);

/// Indented text with flat arrays and objects kept on one line, newline-terminated.
std::string to_text(const Json& doc);

/// Sorted [n, m, count] triples.
Json ag_doc(const AGInvariant& ag);

/// Certificate document, with the witness keyed by vertex label of the first
/// quiver and the arc map keyed by arc label of the mutated triangulation.
Json verdict_doc(const EquivalenceVerdict& v, const Triangulation& a, const Triangulation& b);
/// Reads the "certificate" member of a verdict document.
Certificate parse_certificate(const Json& doc, const Triangulation& a, const Triangulation& b);

}  // namespace surfalg::io
