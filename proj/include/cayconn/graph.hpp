#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cayconn {

using Vertex = std::uint32_t;

/// Simple undirected graph with sorted neighbor lists (CSR layout).
class Graph {
 public:
  Graph() = default;

  /// Throws ArgumentError on loops, repeated edges or endpoints >= order.
  static Graph from_edges(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges);

  /// Builds from per-vertex neighbor lists; lists are sorted and checked
  /// for symmetry.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency);

  std::size_t order() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  std::size_t min_degree() const;
  std::size_t max_degree() const;
  bool is_regular() const { return min_degree() == max_degree(); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edge_list() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// |N(u) ∩ N(v)| by merging sorted lists.
std::size_t common_neighbor_count(const Graph& g, Vertex u, Vertex v);

/// True when a proper 2-coloring exists; fills `side` with 0/1 when given.
bool is_bipartite(const Graph& g, std::vector<std::uint8_t>* side = nullptr);

/// Length of a shortest cycle using BFS from `source` only: exact when some
/// shortest cycle passes through `source` (any vertex of a vertex-transitive
/// graph). Returns 0 when no cycle is seen.
std::size_t girth_from(const Graph& g, Vertex source);

/// Shortest cycle length by BFS from every vertex; 0 for forests.
std::size_t girth_all_sources(const Graph& g);

/// Small fixture graphs used as controls.
namespace fixtures {
Graph cycle(std::size_t length);
Graph complete(std::size_t order);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph hypercube(int dimension);
}  // namespace fixtures

}  // namespace cayconn
