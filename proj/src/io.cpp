#include "surfalg/io.hpp"

#include <algorithm>

#include "surfalg/error.hpp"
#include "surfalg/mutation.hpp"

namespace surfalg::io {

namespace {

[[noreturn]] void malformed(const std::string& where, const std::string& detail) {
  throw Error(ErrorKind::Malformed, where, detail);
}

void check_format(const Json& doc, const std::string& what) {
  if (!doc.is_object()) malformed(what, "expected an object");
  if (!doc.contains("format")) malformed(what, "missing \"format\"");
  if (doc["format"] != kFormat) malformed(what, "unsupported format " + doc["format"].dump());
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) malformed(where, std::string("missing \"") + key + "\"");
  return obj[key];
}

int integer(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) malformed(where, "expected an integer, got " + v.dump());
  return v.get<int>();
}

std::string string(const Json& v, const std::string& where) {
  if (!v.is_string()) malformed(where, "expected a string, got " + v.dump());
  return v.get<std::string>();
}

std::vector<std::pair<std::string, int>> degree_values(const Json& obj, const std::string& where) {
  if (!obj.is_object()) malformed(where, "expected an object of arrow degrees");
  std::vector<std::pair<std::string, int>> out;
  for (const auto& [label, value] : obj.items()) out.emplace_back(label, integer(value, where + "." + label));
  return out;
}

int depth(const Json& v) {
  int d = 0;
  if (v.is_structured())
    for (const auto& x : v) d = std::max(d, depth(x));
  return v.is_structured() ? d + 1 : 0;
}

bool flat(const Json& v) {
  const int d = depth(v);
  return d <= 1 || (v.is_array() && d == 2 && v.size() <= 3);
}

void write(std::string& out, const Json& v, int indent) {
  if (flat(v)) {
    out += v.dump(-1, ' ', false);
    return;
  }
  const std::string pad(indent + 2, ' ');
  const bool obj = v.is_object();
  out += obj ? "{\n" : "[\n";
  std::size_t k = 0;
  for (auto it = v.begin(); it != v.end(); ++it, ++k) {
    out += pad;
    if (obj) out += Json(it.key()).dump() + ": ";
    write(out, *it, indent + 2);
    out += k + 1 < v.size() ? ",\n" : "\n";
  }
  out += std::string(indent, ' ') + (obj ? "}" : "]");
}

}  // namespace

std::string to_text(const Json& doc) {
  std::string out;
  write(out, doc, 0);
  return out + "\n";
}

Fixture parse_triangulation(const Json& doc) {
  check_format(doc, "triangulation");
  Fixture out;
  if (doc.contains("name")) out.name = string(doc["name"], "name");
  const Json& tris = member(doc, "triangles", "triangulation");
  if (!tris.is_array()) malformed("triangles", "expected a list");
  for (std::size_t t = 0; t < tris.size(); ++t) {
    const std::string where = "triangles[" + std::to_string(t) + "]";
    if (!tris[t].is_array() || tris[t].size() != 3) malformed(where, "a triangle has three sides");
    TriangleSpec spec;
    for (std::size_t k = 0; k < 3; ++k) {
      const Json& side = tris[t][k];
      const std::string at = where + "[" + std::to_string(k) + "]";
      if (side.is_object() && side.contains("arc") && !side.contains("bnd")) {
        const int dir = integer(member(side, "dir", at), at + ".dir");
        if (dir != 1 && dir != -1) malformed(at, "dir must be 1 or -1");
        spec[k] = SideSpec::arc(string(side["arc"], at + ".arc"), dir);
      } else if (side.is_object() && side.contains("bnd") && !side.contains("arc")) {
        spec[k] = SideSpec::segment(string(side["bnd"], at + ".bnd"));
      } else {
        malformed(at, "a side is {\"arc\": label, \"dir\": 1|-1} or {\"bnd\": label}");
      }
    }
    out.triangles.push_back(spec);
  }
  if (doc.contains("cuts")) {
    if (!doc["cuts"].is_object()) malformed("cuts", "expected an object of named cuts");
    for (const auto& [name, values] : doc["cuts"].items())
      out.cuts.push_back({name, degree_values(values, "cuts." + name)});
  }
  return out;
}

Json triangulation_doc(const Triangulation& t, const std::string& name, const std::vector<NamedDegrees>& cuts) {
  Json doc;
  doc["format"] = kFormat;
  if (!name.empty()) doc["name"] = name;
  Json tris = Json::array();
  for (const TriangleSpec& spec : t.specs()) {
    Json tri = Json::array();
    for (const SideSpec& s : spec) {
      Json side;
      if (s.is_arc) {
        side["arc"] = s.label;
        side["dir"] = s.dir;
      } else {
        side["bnd"] = s.label;
      }
      tri.push_back(side);
    }
    tris.push_back(tri);
  }
  doc["triangles"] = tris;
  if (!cuts.empty()) {
    Json c = Json::object();
    for (const NamedDegrees& nd : cuts) {
      Json values = Json::object();
      for (const auto& [label, v] : nd.values) values[label] = v;
      c[nd.name] = values;
    }
    doc["cuts"] = c;
  }
  return doc;
}

NamedDegrees parse_degrees(const Json& doc) {
  check_format(doc, "degrees");
  return {{}, degree_values(member(doc, "degrees", "degrees"), "degrees")};
}

NamedDegrees named(const QuiverWithFaces& q, const DegreeMap& d, std::string name) {
  NamedDegrees out{std::move(name), {}};
  for (int a = 0; a < q.num_arrows(); ++a)
    if (d[a] != 0) out.values.emplace_back(q.arrows[a].label, d[a]);
  return out;
}

Json degrees_doc(const QuiverWithFaces& q, const DegreeMap& d) {
  Json values = Json::object();
  for (int a = 0; a < q.num_arrows(); ++a) values[q.arrows[a].label] = d[a];
  Json doc;
  doc["format"] = kFormat;
  doc["degrees"] = values;
  return doc;
}

DegreeMap resolve(const QuiverWithFaces& q, const NamedDegrees& nd) {
  DegreeMap d(q.num_arrows(), 0);
  for (const auto& [label, v] : nd.values) {
    const auto a = q.find_arrow(label);
    if (!a) throw Error(ErrorKind::UnknownArrow, label, "no such arrow in the quiver");
    d[*a] = v;
  }
  return d;
}

std::vector<CurveWord> parse_words(const Json& doc) {
  check_format(doc, "words");
  const Json& words = member(doc, "words", "words");
  if (!words.is_array()) malformed("words", "expected a list of words");
  std::vector<CurveWord> out;
  for (std::size_t w = 0; w < words.size(); ++w) {
    const std::string where = "words[" + std::to_string(w) + "]";
    if (!words[w].is_array()) malformed(where, "expected a list of traversals");
    CurveWord word;
    for (std::size_t k = 0; k < words[w].size(); ++k) {
      const Json& rec = words[w][k];
      const std::string at = where + "[" + std::to_string(k) + "]";
      word.push_back({integer(member(rec, "triangle", at), at + ".triangle"), integer(member(rec, "in", at), at + ".in"),
                      integer(member(rec, "out", at), at + ".out")});
    }
    out.push_back(std::move(word));
  }
  return out;
}

Json words_doc(const std::vector<CurveWord>& words) {
  Json list = Json::array();
  for (const CurveWord& w : words) {
    Json word = Json::array();
    for (const CornerTraversal& c : w) word.push_back({{"triangle", c.triangle}, {"in", c.in}, {"out", c.out}});
    list.push_back(word);
  }
  Json doc;
  doc["format"] = kFormat;
  doc["words"] = list;
  return doc;
}

Json ag_doc(const AGInvariant& ag) {
  Json out = Json::array();
  for (const auto& [nm, count] : ag) out.push_back({nm.first, nm.second, count});
  return out;
}

Json verdict_doc(const EquivalenceVerdict& v, const Triangulation& a, const Triangulation& b) {
  Json doc;
  doc["format"] = kFormat;
  doc["verdict"] = std::string(to_string(v.verdict));
  doc["sigma"] = v.sigma;
  doc["states_explored"] = v.states_explored;
  if (v.certificate) {
    const Certificate& c = *v.certificate;
    Json cert;
    cert["flips"] = c.flips;
    Triangulation mutated = b;
    for (const std::string& label : c.flips) mutated = mutated.flip(mutated.arc_index(label));
    Json arcs = Json::object();
    for (int i = 0; i < mutated.num_arcs(); ++i) arcs[mutated.arc_label(i)] = a.arc_label(c.iso.arc_map[i]);
    cert["triangles"] = c.iso.triangle_map;
    cert["shift"] = c.iso.shift;
    cert["arcs"] = arcs;
    Json witness = Json::object();
    for (int i = 0; i < a.num_arcs(); ++i) witness[a.arc_label(i)] = c.witness[i];
    cert["witness"] = witness;
    doc["certificate"] = cert;
  }
  return doc;
}

Certificate parse_certificate(const Json& doc, const Triangulation& a, const Triangulation& b) {
  check_format(doc, "certificate");
  const Json& cert = member(doc, "certificate", "certificate");
  Certificate out;
  for (const Json& f : member(cert, "flips", "certificate")) out.flips.push_back(string(f, "certificate.flips"));
  Triangulation mutated = b;
  for (const std::string& label : out.flips) mutated = mutated.flip(flippable_arc(mutated, label));
  for (const Json& x : member(cert, "triangles", "certificate")) out.iso.triangle_map.push_back(integer(x, "certificate.triangles"));
  for (const Json& x : member(cert, "shift", "certificate")) out.iso.shift.push_back(integer(x, "certificate.shift"));
  if (static_cast<int>(out.iso.triangle_map.size()) != mutated.num_triangles() ||
      out.iso.shift.size() != out.iso.triangle_map.size())
    malformed("certificate", "triangle map has the wrong size");
  out.iso.arc_map.assign(mutated.num_arcs(), -1);
  const Json& arcs = member(cert, "arcs", "certificate");
  for (int i = 0; i < mutated.num_arcs(); ++i)
    out.iso.arc_map[i] = a.arc_index(string(member(arcs, mutated.arc_label(i).c_str(), "certificate.arcs"),
                                            "certificate.arcs." + mutated.arc_label(i)));
  const Json& witness = member(cert, "witness", "certificate");
  out.witness.assign(a.num_arcs(), 0);
  for (int i = 0; i < a.num_arcs(); ++i)
    out.witness[i] = integer(member(witness, a.arc_label(i).c_str(), "certificate.witness"), "certificate.witness");
  return out;
}

}  // namespace surfalg::io
