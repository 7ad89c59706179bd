#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cayconn/genset.hpp"
#include "cayconn/graph.hpp"
#include "cayconn/perm.hpp"

namespace cayconn {

/// Edges between two blocks of the hierarchical decomposition.
struct CrossEdgeSet {
  int i = 0;
  int j = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // (block-i end, block-j end)
};

/// Four vertices in cycle order, canonical: a is the smallest rank and b < d.
using FourCycle = std::array<Vertex, 4>;

/// Cay(Sym(n), T) materialized on rank-indexed vertices.
class CayleyGraph {
 public:
  /// Throws CapacityError for n > kMaxArity.
  static CayleyGraph build(const GeneratingGraph& gen);

  /// Unchecked assembly from an arbitrary adjacency on n! vertices. Block
  /// metadata is recomputed from the vertex permutations. Used for
  /// corrupted control fixtures.
  static CayleyGraph assemble(const GeneratingGraph& gen, Graph adjacency);

  int n() const { return gen_.n(); }
  const GeneratingGraph& generators() const { return gen_; }
  const PeelChoice& peel() const { return peel_; }
  const Graph& graph() const { return graph_; }
  std::size_t order() const { return graph_.order(); }

  Permutation perm(Vertex v) const { return unrank(v, n()); }
  Vertex vertex(const Permutation& p) const;
  std::string label(Vertex v) const { return perm(v).to_string(); }

  /// Symbol at the peel position (1-based block index).
  int block_of(Vertex v) const { return block_[v]; }
  std::vector<Vertex> block_vertices(int block) const;

  /// Generator whose swap maps u to v; nullopt when no generator does.
  std::optional<Transposition> edge_label(Vertex u, Vertex v) const;

  bool is_modified_bubble_sort() const { return gen_.cls() == GenClass::Cycle; }

 private:
  CayleyGraph(GeneratingGraph gen, PeelChoice peel, Graph graph);

  GeneratingGraph gen_;
  PeelChoice peel_;
  Graph graph_;
  std::vector<std::uint8_t> block_;
};

/// Neighbors of u outside its block, sorted.
std::vector<Vertex> out_neighbors(const CayleyGraph& g, Vertex u);

/// Throws ArgumentError for i == j or blocks outside [1, n].
CrossEdgeSet cross_edges(const CayleyGraph& g, int i, int j);

inline std::size_t common_neighbor_count(const CayleyGraph& g, Vertex u, Vertex v) {
  return common_neighbor_count(g.graph(), u, v);
}

/// Single-source girth (vertex-transitive). Returns nullopt for forests.
std::optional<std::size_t> girth(const CayleyGraph& g);

/// Cross-check of girth() by BFS from every vertex.
std::optional<std::size_t> girth_exhaustive(const CayleyGraph& g);

/// All 4-cycles of a simple graph, each once in canonical orientation,
/// sorted lexicographically.
std::vector<FourCycle> enumerate_4cycles(const Graph& g);

/// First canonical 4-cycle in lexicographic order, without a full census.
std::optional<FourCycle> first_4cycle(const Graph& g);

}  // namespace cayconn
