#include "qra/dot_export.hpp"

#include <sstream>

namespace qra {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string algebra_hasse_dot(const FiniteAlgebra& a) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int x = 0; x < a.n; ++x) {
    os << "  n" << x << " [label=" << quote(a.name(x));
    if (element_idempotent(a, x)) os << ", style=filled, fillcolor=black, fontcolor=white";
    os << "];\n";
  }
  // cover relation: x < y with nothing strictly between
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y) {
      if (x == y || !a.le(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < a.n && cover; ++z)
        if (z != x && z != y && a.le(x, z) && a.le(z, y)) cover = false;
      if (cover) os << "  n" << x << " -> n" << y << " [arrowhead=none];\n";
    }
  os << "}\n";
  return os.str();
}

std::string context_dot(const RepContext& ctx) {
  int n = ctx.points.n;
  std::ostringstream os;
  os << "digraph context {\n  rankdir=BT;\n  node [shape=circle];\n";

  // E blocks as dashed clusters
  std::vector<int> block(n, -1);
  int nb = 0;
  for (int x = 0; x < n; ++x) {
    if (block[x] != -1) continue;
    for (int y = 0; y < n; ++y)
      if (ctx.e.at(x, y)) block[y] = nb;
    ++nb;
  }
  for (int b = 0; b < nb; ++b) {
    os << "  subgraph cluster_" << b << " {\n    style=\"rounded,dashed\";\n";
    for (int x = 0; x < n; ++x)
      if (block[x] == b) os << "    p" << x << " [label=" << quote("p" + std::to_string(x)) << "];\n";
    os << "  }\n";
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !ctx.points.leq.at(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < n && cover; ++z)
        if (z != x && z != y && ctx.points.leq.at(x, z) && ctx.points.leq.at(z, y))
          cover = false;
      if (cover) os << "  p" << x << " -> p" << y << " [arrowhead=none];\n";
    }
  for (int x = 0; x < n; ++x)
    os << "  p" << x << " -> p" << ctx.alpha[x] << " [style=dashed, color=blue, constraint=false];\n";
  for (int x = 0; x < n; ++x)
    os << "  p" << x << " -> p" << ctx.beta[x] << " [style=dotted, color=red, constraint=false];\n";
  os << "}\n";
  return os.str();
}

}  // namespace qra
