#include "cayconn/cayley.hpp"

#include <algorithm>

#include "cayconn/errors.hpp"

namespace cayconn {

CayleyGraph::CayleyGraph(GeneratingGraph gen, PeelChoice peel, Graph graph)
    : gen_(std::move(gen)), peel_(std::move(peel)), graph_(std::move(graph)) {
  block_.resize(graph_.order());
  const auto pos = static_cast<std::size_t>(peel_.position - 1);
  for (Vertex v = 0; v < graph_.order(); ++v) {
    block_[v] = static_cast<std::uint8_t>(unrank(v, gen_.n()).symbols()[pos]);
  }
}

CayleyGraph CayleyGraph::build(const GeneratingGraph& gen) {
  const int n = gen.n();
  if (n > kMaxArity) {
    throw CapacityError("arity " + std::to_string(n) + " exceeds the materialization cap of " +
                        std::to_string(kMaxArity));
  }
  const auto order = factorial(n);
  std::vector<std::vector<Vertex>> adj(order);
  for (std::uint64_t r = 0; r < order; ++r) {
    const Permutation p = unrank(r, n);
    auto& list = adj[r];
    list.reserve(gen.edges().size());
    for (const auto& t : gen.edges()) {
      list.push_back(static_cast<Vertex>(rank(apply_swap(p, t.k, t.l)).index));
    }
  }
  return CayleyGraph(gen, choose_peel(gen), Graph::from_adjacency(std::move(adj)));
}

CayleyGraph CayleyGraph::assemble(const GeneratingGraph& gen, Graph adjacency) {
  if (adjacency.order() != factorial(gen.n())) {
    throw ArgumentError("adjacency order " + std::to_string(adjacency.order()) + " is not " +
                        std::to_string(gen.n()) + "!");
  }
  return CayleyGraph(gen, choose_peel(gen), std::move(adjacency));
}

Vertex CayleyGraph::vertex(const Permutation& p) const {
  if (p.size() != n()) {
    throw ArgumentError("permutation " + p.to_string() + " has arity " + std::to_string(p.size()) +
                        ", graph has " + std::to_string(n()));
  }
  return static_cast<Vertex>(rank(p).index);
}

std::vector<Vertex> CayleyGraph::block_vertices(int block) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < order(); ++v) {
    if (block_[v] == block) out.push_back(v);
  }
  return out;
}

std::optional<Transposition> CayleyGraph::edge_label(Vertex u, Vertex v) const {
  const Permutation a = perm(u);
  const Permutation b = perm(v);
  std::vector<int> diff;
  for (int i = 1; i <= n(); ++i) {
    if (a.at(i) != b.at(i)) diff.push_back(i);
  }
  if (diff.size() != 2 || a.at(diff[0]) != b.at(diff[1])) return std::nullopt;
  if (!generators().has_edge(diff[0], diff[1])) return std::nullopt;
  return Transposition{diff[0], diff[1]};
}

std::vector<Vertex> out_neighbors(const CayleyGraph& g, Vertex u) {
  std::vector<Vertex> out;
  for (Vertex w : g.graph().neighbors(u)) {
    if (g.block_of(w) != g.block_of(u)) out.push_back(w);
  }
  return out;
}

CrossEdgeSet cross_edges(const CayleyGraph& g, int i, int j) {
  if (i == j) throw ArgumentError("cross_edges needs distinct blocks, got " + std::to_string(i) + " twice");
  if (i < 1 || i > g.n() || j < 1 || j > g.n()) {
    throw ArgumentError("block outside [1, " + std::to_string(g.n()) + "]");
  }
  CrossEdgeSet set{i, j, {}};
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.block_of(u) != i) continue;
    for (Vertex w : g.graph().neighbors(u)) {
      if (g.block_of(w) == j) set.edges.emplace_back(u, w);
    }
  }
  return set;
}

std::optional<std::size_t> girth(const CayleyGraph& g) {
  if (g.order() == 0) return std::nullopt;
  const std::size_t len = girth_from(g.graph(), 0);
  if (len == 0) return std::nullopt;
  return len;
}

std::optional<std::size_t> girth_exhaustive(const CayleyGraph& g) {
  const std::size_t len = girth_all_sources(g.graph());
  if (len == 0) return std::nullopt;
  return len;
}

namespace {

// Calls emit(cycle) for 4-cycles with smallest vertex `a` and b < d, in
// lexicographic order; stops early when emit returns false.
template <class Emit>
bool cycles_at(const Graph& g, Vertex a, std::vector<std::pair<Vertex, Vertex>>& cd, Emit&& emit) {
  auto na = g.neighbors(a);
  for (std::size_t x = 0; x < na.size(); ++x) {
    const Vertex b = na[x];
    if (b < a) continue;
    cd.clear();
    for (std::size_t y = x + 1; y < na.size(); ++y) {
      const Vertex d = na[y];
      for (Vertex c : g.neighbors(b)) {
        if (c > a && g.adjacent(c, d)) cd.emplace_back(c, d);
      }
    }
    std::sort(cd.begin(), cd.end());
    for (auto [c, d] : cd) {
      if (!emit(FourCycle{a, b, c, d})) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<FourCycle> enumerate_4cycles(const Graph& g) {
  std::vector<FourCycle> out;
  std::vector<std::pair<Vertex, Vertex>> scratch;
  for (Vertex a = 0; a < g.order(); ++a) {
    cycles_at(g, a, scratch, [&](const FourCycle& c) {
      out.push_back(c);
      return true;
    });
  }
  return out;
}

std::optional<FourCycle> first_4cycle(const Graph& g) {
  std::optional<FourCycle> found;
  std::vector<std::pair<Vertex, Vertex>> scratch;
  for (Vertex a = 0; a < g.order() && !found; ++a) {
    cycles_at(g, a, scratch, [&](const FourCycle& c) {
      found = c;
      return false;
    });
  }
  return found;
}

}  // namespace cayconn
