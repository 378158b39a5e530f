#include "surfalg/dot.hpp"

#include <algorithm>
#include <sstream>

namespace surfalg {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void nodes(std::ostream& os, std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  for (const std::string& l : labels) os << "  " << quoted(l) << ";\n";
}

}  // namespace

std::string to_dot(const QuiverWithFaces& q) {
  std::ostringstream os;
  os << "digraph quiver {\n  node [shape=circle];\n";
  nodes(os, q.vertex_labels);
  auto edge = [&](const char* indent, int a) {
    const Arrow& ar = q.arrows[a];
    os << indent << quoted(q.vertex_labels[ar.source]) << " -> " << quoted(q.vertex_labels[ar.target])
       << " [label=" << quoted(ar.label) << "];\n";
  };
  const std::vector<int> face = q.face_of_arrows();
  for (int a = 0; a < q.num_arrows(); ++a)
    if (face[a] < 0) edge("  ", a);
  for (int f = 0; f < q.num_faces(); ++f) {
    os << "  subgraph face" << f << " {\n    label=" << quoted("face " + std::to_string(f)) << ";\n";
    for (int a : q.faces[f].arrows) edge("    ", a);
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const GentlePresentation& p) {
  std::ostringstream os;
  os << "digraph algebra {\n  node [shape=circle];\n";
  nodes(os, p.vertex_labels);
  for (const auto& a : p.arrows)
    os << "  " << quoted(p.vertex_labels[a.source]) << " -> " << quoted(p.vertex_labels[a.target])
       << " [label=" << quoted(a.label) << "];\n";
  for (const auto& [a, b] : p.relations)
    os << "  " << quoted(p.vertex_labels[p.arrows[a].source]) << " -> "
       << quoted(p.vertex_labels[p.arrows[b].target]) << " [style=dashed, label="
       << quoted(p.arrows[a].label + " " + p.arrows[b].label) << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace surfalg
