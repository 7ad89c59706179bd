#include "cayconn/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "cayconn/errors.hpp"

namespace cayconn {

Graph Graph::from_edges(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<std::vector<Vertex>> adj(order);
  for (auto [u, v] : edges) {
    if (u >= order || v >= order) {
      throw ArgumentError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                          " has an endpoint outside [0, " + std::to_string(order) + ")");
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return from_adjacency(std::move(adj));
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency) {
  Graph g;
  const std::size_t order = adjacency.size();
  g.offsets_.reserve(order + 1);
  g.offsets_.push_back(0);
  for (std::size_t v = 0; v < order; ++v) {
    auto& list = adjacency[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw ArgumentError("repeated edge at vertex " + std::to_string(v));
    }
    for (Vertex w : list) {
      if (w == v) throw ArgumentError("loop at vertex " + std::to_string(v));
      if (w >= order) throw ArgumentError("neighbor " + std::to_string(w) + " out of range");
    }
    g.targets_.insert(g.targets_.end(), list.begin(), list.end());
    g.offsets_.push_back(g.targets_.size());
  }
  for (Vertex v = 0; v < order; ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (!g.adjacent(w, v)) {
        throw ArgumentError("adjacency not symmetric at " + std::to_string(v) + "-" + std::to_string(w));
      }
    }
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto n = neighbors(u);
  return std::binary_search(n.begin(), n.end(), v);
}

std::size_t Graph::min_degree() const {
  std::size_t d = order() ? degree(0) : 0;
  for (Vertex v = 1; v < order(); ++v) d = std::min(d, degree(v));
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (Vertex v = 0; v < order(); ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_list() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t common_neighbor_count(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw ArgumentError("common_neighbor_count needs distinct vertices");
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::size_t i = 0, j = 0, count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

bool is_bipartite(const Graph& g, std::vector<std::uint8_t>* side) {
  std::vector<std::uint8_t> color(g.order(), 2);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] != 2) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == 2) {
          color[w] = static_cast<std::uint8_t>(1 - color[v]);
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  if (side) *side = std::move(color);
  return true;
}

std::size_t girth_from(const Graph& g, Vertex source) {
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(g.order(), kUnseen);
  std::vector<Vertex> parent(g.order(), source);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  std::size_t best = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    // Once the frontier is deep enough no shorter cycle can close.
    if (best != 0 && 2 * dist[v] + 1 >= best) break;
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnseen) {
        dist[w] = dist[v] + 1;
        parent[w] = v;
        queue.push_back(w);
      } else if (parent[v] != w) {
        std::size_t len = dist[v] + dist[w] + 1;
        if (best == 0 || len < best) best = len;
      }
    }
  }
  return best;
}

std::size_t girth_all_sources(const Graph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    std::size_t c = girth_from(g, s);
    if (c != 0 && (best == 0 || c < best)) best = c;
  }
  return best;
}

namespace fixtures {

Graph cycle(std::size_t length) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < length; ++i) {
    e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % length));
  }
  return Graph::from_edges(length, e);
}

Graph complete(std::size_t order) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < order; ++i) {
    for (Vertex j = i + 1; j < order; ++j) e.emplace_back(i, j);
  }
  return Graph::from_edges(order, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) e.emplace_back(i, static_cast<Vertex>(a + j));
  }
  return Graph::from_edges(a + b, e);
}

Graph hypercube(int dimension) {
  const std::size_t order = std::size_t{1} << dimension;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 0; v < order; ++v) {
    for (int b = 0; b < dimension; ++b) {
      Vertex w = v ^ (Vertex{1} << b);
      if (v < w) e.emplace_back(v, w);
    }
  }
  return Graph::from_edges(order, e);
}

}  // namespace fixtures

}  // namespace cayconn
