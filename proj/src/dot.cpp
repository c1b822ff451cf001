#include "utn/dot.hpp"

#include <map>
#include <sstream>

namespace utn {

std::string splice_to_dot(const Splice& S, const Field* F,
                          const SpliceLabeling* sigma) {
  if ((F == nullptr) != (sigma == nullptr)) {
    throw UsageError("splice_to_dot: labeling requires its field");
  }
  // Labels attach to the dashed arc (i, k) of each binding <i,j|k,l>; a
  // splice has at most one binding per such arc.
  std::map<Edge, std::string> arc_label;
  if (sigma) {
    SpliceShape shape = decompose_splice(S);
    if (sigma->size() != shape.bindings.size()) {
      throw UsageError("splice_to_dot: labeling does not match the bindings");
    }
    for (size_t t = 0; t < shape.bindings.size(); ++t) {
      const Binding& b = shape.bindings[t];
      arc_label[Edge{b.i, b.k}] = F->to_string((*sigma)[t]);
    }
  }
  std::ostringstream out;
  out << "graph splice {\n"
      << "  rankdir=LR;\n"
      << "  node [shape=plaintext, fontsize=12];\n"
      << "  edge [fontsize=10];\n  ";
  for (int v = 1; v <= S.n; ++v) {
    out << "v" << v << " [label=\"" << v << "\"];";
    out << (v < S.n ? " " : "\n");
  }
  // Invisible spine keeps the vertices in line order.
  out << "  ";
  for (int v = 1; v <= S.n; ++v) {
    out << "v" << v;
    if (v < S.n) out << " -- ";
  }
  out << " [style=invis];\n";
  for (Edge e : S.lambda) {
    out << "  v" << e.i << " -- v" << e.j
        << " [style=solid, constraint=false];\n";
  }
  for (Edge e : S.nu) {
    out << "  v" << e.i << " -- v" << e.j
        << " [style=dashed, constraint=false";
    auto it = arc_label.find(e);
    if (it != arc_label.end()) out << ", label=\"" << it->second << "\"";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string stanley_to_dot(const StanleyGraph& G, const Field* F,
                           const EdgeLabeling* tau) {
  if ((F == nullptr) != (tau == nullptr)) {
    throw UsageError("stanley_to_dot: labeling requires its field");
  }
  if (tau && tau->size() != G.edges.size()) {
    throw UsageError("stanley_to_dot: labeling does not match the edges");
  }
  std::ostringstream out;
  out << "digraph stanley {\n"
      << "  rankdir=LR;\n"
      << "  node [fontsize=12];\n"
      << "  edge [fontsize=10];\n";
  for (int v = 0; v < G.k; ++v) {
    out << "  u" << v << " [label=\"" << v << "\", shape="
        << (G.in_v[v] ? "doublecircle" : "circle") << "];\n";
  }
  for (size_t t = 0; t < G.edges.size(); ++t) {
    out << "  u" << G.edges[t].first << " -> u" << G.edges[t].second;
    if (tau) out << " [label=\"" << F->to_string((*tau)[t]) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace utn
