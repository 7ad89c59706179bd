#include "cayconn/export.hpp"

#include <sstream>

#include "cayconn/errors.hpp"

namespace cayconn {

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw CapacityError("graph6 output supports at most " + std::to_string(kGraph6MaxOrder) +
                        " vertices, graph has " + std::to_string(n));
  }
  std::string out(1, static_cast<char>(63 + n));
  int bits = 0;
  int acc = 0;
  // Upper triangle, column by column.
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(63 + acc);
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out += static_cast<char>(63 + (acc << (6 - bits)));
  out += '\n';
  return out;
}

std::string to_dot(const CayleyGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    os << "  " << v << " [label=\"" << g.label(v) << "\"];\n";
  }
  for (auto [u, v] : g.graph().edge_list()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_edge_list(const CayleyGraph& g) {
  std::ostringstream os;
  os << "n=" << g.n() << " order=" << g.order() << " degree=" << g.graph().max_degree() << "\n";
  for (auto [u, v] : g.graph().edge_list()) os << u << " " << v << "\n";
  return os.str();
}

}  // namespace cayconn
