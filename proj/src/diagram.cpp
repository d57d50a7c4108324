#include "idealops/diagram.hpp"

#include <sstream>

#include "idealops/lattice.hpp"

namespace idealops {

std::string emit_diagram(const Window& w, const std::optional<ClosureOp>& op) {
  auto lat = build_lattice(w);
  const int n = lat->size();
  std::ostringstream os;
  os << "digraph ideals {\n";
  os << "  rankdir=TB;\n  node [shape=plaintext];\n";
  for (int i = 0; i < n; ++i)
    os << "  n" << i << " [label=\"" << to_string(lat->ideals[i]) << "\"];\n";
  // covering relation: i > j with nothing strictly between
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !lat->leq(j, i)) continue;
      bool covers = true;
      for (int k = 0; k < n && covers; ++k) {
        if (k == i || k == j) continue;
        if (lat->leq(j, k) && lat->leq(k, i)) covers = false;
      }
      if (covers)
        os << "  n" << i << " -> n" << j << " [dir=none];\n";
    }
  if (op) {
    RawMap m = to_raw(*op, lat);
    for (int i = 0; i < n; ++i) {
      if (i == lat->unit_idx) continue;
      if (m.img[i] == i)
        os << "  n" << i << " -> n" << i
           << " [color=blue, style=dashed, label=\"closed\"];\n";
      else
        os << "  n" << i << " -> n" << m.img[i] << " [color=red, penwidth=2];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace idealops
