#include "surfalg/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "surfalg/ag.hpp"
#include "surfalg/dot.hpp"
#include "surfalg/error.hpp"
#include "surfalg/io.hpp"
#include "surfalg/mutation.hpp"

namespace surfalg::cli {

namespace {

using io::Json;

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void data_error(const std::string& message) { throw Failure{kData, message}; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) data_error(path + ": cannot read file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int line_of(const std::string& text, std::size_t offset) {
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + std::min(offset, text.size()), '\n'));
}

// Line of the last quoted occurrence of the label, 0 if absent.
int line_of_label(const std::string& text, const std::string& label) {
  if (label.empty()) return 0;
  const std::size_t pos = text.rfind("\"" + label + "\"");
  return pos == std::string::npos ? 0 : line_of(text, pos);
}

std::string where(const std::string& source, const std::string& text, const std::string& label) {
  const int line = line_of_label(text, label);
  return line > 0 ? source + ":" + std::to_string(line) : source;
}

Json parse_json(const std::string& path, const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    data_error(path + ":" + std::to_string(line_of(text, e.byte > 0 ? e.byte - 1 : 0)) + ": " + e.what());
  }
}

struct Loaded {
  std::string source;
  std::string text;
  Fixture doc;
  std::unique_ptr<Triangulation> t;
  QuiverWithFaces q;
};

bool is_source(const std::string& s) { return find_fixture(s) || std::filesystem::is_regular_file(s); }

Loaded load(const std::string& source) {
  Loaded l;
  l.source = source;
  if (auto f = find_fixture(source)) {
    l.doc = *f;
  } else {
    if (!std::filesystem::is_regular_file(source)) data_error(source + ": no such file or builtin fixture");
    l.text = read_file(source);
    try {
      l.doc = io::parse_triangulation(parse_json(source, l.text));
    } catch (const Error& e) {
      data_error(where(source, l.text, e.label()) + ": " + e.what());
    }
  }
  try {
    l.t = std::make_unique<Triangulation>(l.doc.triangles);
  } catch (const Error& e) {
    data_error(where(source, l.text, e.label()) + ": " + e.what());
  }
  l.q = quiver_of(*l.t);
  return l;
}

// "file:cut" with the cut part optional.
std::pair<std::string, std::string> split_source(const std::string& spec) {
  if (is_source(spec)) return {spec, {}};
  const std::size_t colon = spec.rfind(':');
  if (colon == std::string::npos) return {spec, {}};
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

DegreeMap load_cut(const Loaded& l, const std::string& cut) {
  for (const NamedDegrees& nd : l.doc.cuts)
    if (nd.name == cut) {
      try {
        return io::resolve(l.q, nd);
      } catch (const Error& e) {
        data_error(where(l.source, l.text, e.label()) + ": " + e.what());
      }
    }
  if (std::filesystem::is_regular_file(cut)) {
    const std::string text = read_file(cut);
    try {
      return io::resolve(l.q, io::parse_degrees(parse_json(cut, text)));
    } catch (const Error& e) {
      data_error(where(cut, text, e.label()) + ": " + e.what());
    }
  }
  if (!cut.empty() && std::all_of(cut.begin(), cut.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const auto cuts = enumerate_admissible_cuts(l.q);
    const std::size_t k = std::stoul(cut);
    if (k < cuts.size()) return cuts[k];
    data_error(l.source + ": cut index " + cut + " out of range (" + std::to_string(cuts.size()) + " cuts)");
  }
  data_error(l.source + ": no cut named " + cut);
}

std::vector<CurveWord> load_words(const std::string& path) {
  if (path.empty()) return {};
  const std::string text = read_file(path);
  try {
    return io::parse_words(parse_json(path, text));
  } catch (const Error& e) {
    data_error(where(path, text, e.label()) + ": " + e.what());
  }
}

template <class T>
std::string joined(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

struct Options {
  bool json = false;
  std::string output;
  std::string source;
  std::string source2;
  std::string cut;
  std::vector<std::string> arcs;
  std::string side = "left";
  std::string generators;
  int budget = 20000;
  std::string certificate;
  std::string check;
};

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) data_error(o.output + ": cannot write file");
  f << text;
}

std::string dump(const Json& j) { return io::to_text(j); }

// With the cut given inline or by --cut.
std::pair<Loaded, DegreeMap> load_with_cut(const Options& o) {
  auto [path, inline_cut] = split_source(o.source);
  const std::string cut = o.cut.empty() ? inline_cut : o.cut;
  Loaded l = load(path);
  if (cut.empty()) throw Failure{kUsage, "a cut is required (--cut NAME|FILE|INDEX or SOURCE:CUT)"};
  DegreeMap d = load_cut(l, cut);
  return {std::move(l), std::move(d)};
}

int cmd_info(const Options& o, std::ostream& out) {
  const Loaded l = load(split_source(o.source).first);
  const Triangulation& t = *l.t;
  const SurfaceData& s = t.surface();
  int uncontractible = 0;
  std::vector<std::string> classes;
  for (int i = 0; i < t.num_triangles(); ++i) {
    const TriangleClass c = t.classify(i);
    uncontractible += c == TriangleClass::Uncontractible ? 1 : 0;
    classes.emplace_back(to_string(c));
  }
  if (o.json) {
    Json j;
    j["format"] = io::kFormat;
    j["genus"] = s.genus;
    j["euler_characteristic"] = s.euler_characteristic;
    Json comps = Json::array();
    for (const BoundaryComponent& b : s.components) {
      std::vector<std::string> segs;
      for (int seg : b.segments) segs.push_back(t.segment_label(seg));
      comps.push_back({{"segments", segs}, {"points", b.points.size()}});
    }
    j["components"] = comps;
    j["arcs"] = t.num_arcs();
    j["triangles"] = t.num_triangles();
    j["uncontractible"] = uncontractible;
    j["classes"] = classes;
    emit(o, out, dump(j));
    return kOk;
  }
  std::ostringstream os;
  os << "g=" << s.genus << "\n"
     << "b=" << s.num_components() << "\n"
     << "p=" << joined(s.points_per_component) << "\n"
     << "chi=" << s.euler_characteristic << "\n"
     << "arcs=" << t.num_arcs() << "\n"
     << "triangles=" << t.num_triangles() << "\n"
     << "uncontractible=" << uncontractible << "\n";
  for (int i = 0; i < s.num_components(); ++i) {
    std::vector<std::string> segs;
    for (int seg : s.components[i].segments) segs.push_back(t.segment_label(seg));
    os << "B" << i << ": " << joined(segs, " ") << "\n";
  }
  for (int i = 0; i < t.num_triangles(); ++i) os << "T" << i << ": " << classes[i] << "\n";
  emit(o, out, os.str());
  return kOk;
}

int cmd_quiver(const Options& o, std::ostream& out) {
  const Loaded l = load(split_source(o.source).first);
  const QuiverWithFaces& q = l.q;
  const int h1 = h1_rank(boundary_complex(q));
  if (o.json) {
    Json j;
    j["format"] = io::kFormat;
    j["vertices"] = q.vertex_labels;
    Json arrows = Json::array();
    for (const Arrow& a : q.arrows)
      arrows.push_back({{"label", a.label}, {"source", q.vertex_labels[a.source]}, {"target", q.vertex_labels[a.target]}});
    j["arrows"] = arrows;
    Json faces = Json::array();
    for (const Face& f : q.faces)
      faces.push_back({q.arrows[f.arrows[0]].label, q.arrows[f.arrows[1]].label, q.arrows[f.arrows[2]].label});
    j["faces"] = faces;
    j["h1_rank"] = h1;
    emit(o, out, dump(j));
    return kOk;
  }
  std::ostringstream os;
  os << "vertices=" << joined(q.vertex_labels) << "\n";
  for (const Arrow& a : q.arrows) os << a.label << "\n";
  for (int f = 0; f < q.num_faces(); ++f) {
    const Face& face = q.faces[f];
    os << "face" << f << ": " << q.arrows[face.arrows[0]].label << " " << q.arrows[face.arrows[1]].label << " "
       << q.arrows[face.arrows[2]].label << "\n";
  }
  os << "h1_rank=" << h1 << "\n";
  emit(o, out, os.str());
  return kOk;
}

int cmd_cuts(const Options& o, std::ostream& out) {
  const Loaded l = load(split_source(o.source).first);
  const auto cuts = enumerate_admissible_cuts(l.q);
  const bool weights = !l.t->surface().is_disc();
  Json list = Json::array();
  std::ostringstream os;
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    std::vector<std::string> labels;
    for (const auto& [label, v] : io::named(l.q, cuts[k]).values) labels.push_back(label);
    Json entry;
    entry["index"] = k;
    entry["cut"] = labels;
    os << k << ": " << joined(labels, " ");
    if (weights) {
      const auto w = boundary_weight(*l.t, l.q, cuts[k]);
      entry["boundary_weight"] = w;
      os << "  boundary_weight=" << joined(w);
    }
    os << "\n";
    list.push_back(entry);
  }
  if (o.json) {
    Json j;
    j["format"] = io::kFormat;
    j["cuts"] = list;
    emit(o, out, dump(j));
  } else {
    emit(o, out, os.str());
  }
  return kOk;
}

int cmd_weight(const Options& o, std::ostream& out) {
  const auto [l, d] = load_with_cut(o);
  const GeneratorSystem eps = generator_system(*l.t, l.q, load_words(o.generators));
  const auto w = weight(*l.t, l.q, d, eps);
  if (o.json) {
    Json j;
    j["format"] = io::kFormat;
    j["weight"] = w;
    emit(o, out, dump(j));
  } else {
    emit(o, out, joined(w) + "\n");
  }
  return kOk;
}

int cmd_flip(const Options& o, std::ostream& out) {
  const Loaded l = load(split_source(o.source).first);
  Triangulation t = *l.t;
  for (const std::string& arc : o.arcs) t = t.flip(flippable_arc(t, arc));
  emit(o, out, dump(io::triangulation_doc(t, l.doc.name)));
  return kOk;
}

int cmd_mutate(const Options& o, std::ostream& out) {
  auto [l, d] = load_with_cut(o);
  if (o.side != "left" && o.side != "right") throw Failure{kUsage, "--side must be left or right"};
  const MutationSide side = o.side == "left" ? MutationSide::Left : MutationSide::Right;
  GradedTriangulation gt{*l.t, d};
  for (const std::string& arc : o.arcs) gt = graded_mutate(gt, flippable_arc(gt.triangulation, arc), side);
  const QuiverWithFaces q = quiver_of(gt.triangulation);
  emit(o, out, dump(io::triangulation_doc(gt.triangulation, l.doc.name, {io::named(q, gt.degree, "mutated")})));
  return kOk;
}

int cmd_ag(const Options& o, std::ostream& out) {
  const auto [l, d] = load_with_cut(o);
  const AGInvariant formula = ag_formula(*l.t, l.q, d);
  const AGInvariant direct = ag_direct(surface_algebra_presentation(l.q, d));
  const AGInvariant weights = ag_weights(*l.t, boundary_weight(*l.t, l.q, d));
  const bool agree = formula == direct && direct == weights;
  if (o.json) {
    Json j;
    j["format"] = io::kFormat;
    j["formula"] = io::ag_doc(formula);
    j["direct"] = io::ag_doc(direct);
    j["weights"] = io::ag_doc(weights);
    j["agree"] = agree;
    emit(o, out, dump(j));
  } else {
    emit(o, out, "formula=" + to_string(formula) + "\ndirect=" + to_string(direct) + "\nweights=" + to_string(weights) +
                     "\n" + (agree ? "agree" : "DISAGREE") + "\n");
  }
  return agree ? kOk : kFalse;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  Options first = o, second = o;
  first.cut.clear();
  second.cut.clear();
  second.source = o.source2;
  auto [la, da] = load_with_cut(first);
  auto [lb, db] = load_with_cut(second);
  const CutSurface a{la.t.get(), da}, b{lb.t.get(), db};
  if (!o.check.empty()) {
    const std::string text = read_file(o.check);
    Certificate cert;
    try {
      cert = io::parse_certificate(parse_json(o.check, text), *la.t, *lb.t);
    } catch (const Error& e) {
      data_error(where(o.check, text, e.label()) + ": " + e.what());
    }
    const bool ok = verify_certificate(a, b, cert);
    emit(o, out, ok ? "valid\n" : "invalid\n");
    return ok ? kOk : kFalse;
  }
  const EquivalenceVerdict v = equivalence_certificate(a, b, load_words(o.generators), o.budget);
  const Json doc = io::verdict_doc(v, *la.t, *lb.t);
  if (!o.certificate.empty()) {
    std::ofstream f(o.certificate, std::ios::binary);
    if (!f) data_error(o.certificate + ": cannot write file");
    f << dump(doc);
  }
  if (o.json) {
    emit(o, out, dump(doc));
  } else {
    std::ostringstream os;
    os << to_string(v.verdict) << "\n";
    if (!v.sigma.empty()) os << "sigma=" << joined(v.sigma) << "\n";
    if (v.certificate) os << "flips=" << joined(v.certificate->flips) << "\n";
    os << "states=" << v.states_explored << "\n";
    emit(o, out, os.str());
  }
  switch (v.verdict) {
    case Verdict::Equivalent: return kOk;
    case Verdict::NotEquivalent: return kFalse;
    case Verdict::Unknown: return kUnknown;
  }
  return kUnknown;
}

int cmd_ar(const Options& o, std::ostream& out) {
  const auto [l, d] = load_with_cut(o);
  const auto report = ar_report(*l.t, l.q, d);
  Json list = Json::array();
  std::ostringstream os;
  for (std::size_t i = 0; i < report.size(); ++i) {
    const ARComponent& c = report[i];
    if (c.tube) {
      list.push_back({{"component", i}, {"tube", true}, {"rank", c.rank}});
      os << "B" << i << ": tube of rank " << c.rank << "\n";
    } else {
      list.push_back({{"component", i}, {"tube", false}, {"count", c.count}, {"shift", c.shift}, {"tau_power", c.tau_power}});
      os << "B" << i << ": " << c.count << " ZA_inf components, M[" << c.shift << "] = tau^" << c.tau_power << " M\n";
    }
  }
  if (o.json) {
    Json j;
    j["format"] = io::kFormat;
    j["components"] = list;
    emit(o, out, dump(j));
  } else {
    emit(o, out, os.str());
  }
  return kOk;
}

int cmd_dot(const Options& o, std::ostream& out) {
  auto [path, inline_cut] = split_source(o.source);
  const std::string cut = o.cut.empty() ? inline_cut : o.cut;
  const Loaded l = load(path);
  if (cut.empty())
    emit(o, out, to_dot(l.q));
  else
    emit(o, out, to_dot(surface_algebra_presentation(l.q, load_cut(l, cut))));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Surface algebras of triangulated marked surfaces"};
  app.name("surfalg");
  app.require_subcommand(1, 1);
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("-o,--output", o.output, "write the result to a file");

  const std::string source_help = "builtin fixture name or triangulation file";
  const std::string cut_help = "cut name in the document, degree sidecar file, or index from `cuts`";
  auto* info = app.add_subcommand("info", "surface invariants");
  info->add_option("source", o.source, source_help)->required();
  auto* quiver = app.add_subcommand("quiver", "quiver with faces and H1 rank");
  quiver->add_option("source", o.source, source_help)->required();
  auto* cuts = app.add_subcommand("cuts", "admissible cuts");
  cuts->add_option("source", o.source, source_help)->required();
  auto* weight_cmd = app.add_subcommand("weight", "weight of a cut");
  weight_cmd->add_option("source", o.source, source_help + ", optionally SOURCE:CUT")->required();
  weight_cmd->add_option("--cut", o.cut, cut_help);
  weight_cmd->add_option("--generators", o.generators, "curve-word file with the 2g interior generators");
  auto* flip = app.add_subcommand("flip", "flip arcs in turn");
  flip->add_option("source", o.source, source_help)->required();
  flip->add_option("--arc", o.arcs, "arc label")->required();
  auto* mutate = app.add_subcommand("mutate", "graded mutation at arcs in turn");
  mutate->add_option("source", o.source, source_help + ", optionally SOURCE:CUT")->required();
  mutate->add_option("--cut", o.cut, cut_help);
  mutate->add_option("--arc", o.arcs, "arc label")->required();
  mutate->add_option("--side", o.side, "left or right");
  auto* ag = app.add_subcommand("ag", "AG invariant by formula, thread walk and weights");
  ag->add_option("source", o.source, source_help + ", optionally SOURCE:CUT")->required();
  ag->add_option("--cut", o.cut, cut_help);
  auto* equiv = app.add_subcommand("equiv", "derived equivalence of two cut surfaces");
  equiv->add_option("first", o.source, "SOURCE:CUT")->required();
  equiv->add_option("second", o.source2, "SOURCE:CUT")->required();
  equiv->add_option("--generators", o.generators, "curve-word file for the first surface");
  equiv->add_option("--budget", o.budget, "graded triangulations explored by the certificate search");
  equiv->add_option("--certificate", o.certificate, "write the verdict document to a file");
  equiv->add_option("--check", o.check, "verify a certificate document instead of searching");
  auto* ar = app.add_subcommand("ar", "Auslander-Reiten components from the weights");
  ar->add_option("source", o.source, source_help + ", optionally SOURCE:CUT")->required();
  ar->add_option("--cut", o.cut, cut_help);
  auto* dot = app.add_subcommand("dot", "DOT of the quiver, or of the algebra with a cut");
  dot->add_option("source", o.source, source_help + ", optionally SOURCE:CUT")->required();
  dot->add_option("--cut", o.cut, cut_help);
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*info) return cmd_info(o, out);
    if (*quiver) return cmd_quiver(o, out);
    if (*cuts) return cmd_cuts(o, out);
    if (*weight_cmd) return cmd_weight(o, out);
    if (*flip) return cmd_flip(o, out);
    if (*mutate) return cmd_mutate(o, out);
    if (*ag) return cmd_ag(o, out);
    if (*equiv) return cmd_equiv(o, out);
    if (*ar) return cmd_ar(o, out);
    if (*dot) return cmd_dot(o, out);
  } catch (const Failure& f) {
    err << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    err << o.source << ": " << e.what() << "\n";
    return kData;
  }
  return kUsage;
}

}  // namespace surfalg::cli
