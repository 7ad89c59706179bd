#include "cayconn/maxflow.hpp"

#include <algorithm>

#include "cayconn/errors.hpp"

namespace cayconn {

namespace {

// Split digraph: vertex v becomes in-node 2v and out-node 2v+1 joined by a
// unit arc; each edge uv gives arcs out(u)->in(v) and out(v)->in(u).
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : head_(2 * g.order(), -1) {
    for (Vertex v = 0; v < g.order(); ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v : g.neighbors(u)) add_arc(2 * u + 1, 2 * v, kWide);
    }
    flow_.assign(to_.size(), 0);
    parent_arc_.assign(head_.size(), -1);
  }

  std::size_t max_flow(Vertex s, Vertex t, std::size_t limit) {
    std::fill(flow_.begin(), flow_.end(), 0);
    const int source = static_cast<int>(2 * s + 1);
    const int sink = static_cast<int>(2 * t);
    std::size_t total = 0;
    while (total < limit && augment(source, sink)) ++total;
    return total;
  }

  /// Vertices whose in-node is reachable and out-node is not, after max_flow.
  std::vector<Vertex> separator(Vertex s) {
    reachable(static_cast<int>(2 * s + 1));
    std::vector<Vertex> cut;
    for (std::size_t v = 0; v < head_.size() / 2; ++v) {
      if (seen_[2 * v] && !seen_[2 * v + 1]) cut.push_back(static_cast<Vertex>(v));
    }
    return cut;
  }

 private:
  static constexpr int kWide = 1 << 20;

  void add_arc(std::size_t from, std::size_t to, int cap) {
    push(from, to, cap);
    push(to, from, 0);
  }
  void push(std::size_t from, std::size_t to, int cap) {
    to_.push_back(static_cast<int>(to));
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = static_cast<int>(to_.size()) - 1;
  }
  int residual(int arc) const { return cap_[static_cast<std::size_t>(arc)] - flow_[static_cast<std::size_t>(arc)]; }

  bool augment(int source, int sink) {
    std::fill(parent_arc_.begin(), parent_arc_.end(), -1);
    queue_.assign(1, source);
    parent_arc_[static_cast<std::size_t>(source)] = -2;
    for (std::size_t headq = 0; headq < queue_.size(); ++headq) {
      const int v = queue_[headq];
      for (int a = head_[static_cast<std::size_t>(v)]; a >= 0; a = next_[static_cast<std::size_t>(a)]) {
        const int w = to_[static_cast<std::size_t>(a)];
        if (parent_arc_[static_cast<std::size_t>(w)] != -1 || residual(a) <= 0) continue;
        parent_arc_[static_cast<std::size_t>(w)] = a;
        if (w == sink) {
          for (int x = sink; x != source;) {
            const int arc = parent_arc_[static_cast<std::size_t>(x)];
            flow_[static_cast<std::size_t>(arc)] += 1;
            flow_[static_cast<std::size_t>(arc ^ 1)] -= 1;
            x = to_[static_cast<std::size_t>(arc ^ 1)];
          }
          return true;
        }
        queue_.push_back(w);
      }
    }
    return false;
  }

  void reachable(int source) {
    seen_.assign(head_.size(), 0);
    queue_.assign(1, source);
    seen_[static_cast<std::size_t>(source)] = 1;
    for (std::size_t h = 0; h < queue_.size(); ++h) {
      const int v = queue_[h];
      for (int a = head_[static_cast<std::size_t>(v)]; a >= 0; a = next_[static_cast<std::size_t>(a)]) {
        const int w = to_[static_cast<std::size_t>(a)];
        if (!seen_[static_cast<std::size_t>(w)] && residual(a) > 0) {
          seen_[static_cast<std::size_t>(w)] = 1;
          queue_.push_back(w);
        }
      }
    }
  }

  std::vector<int> head_;
  std::vector<int> to_, cap_, next_, flow_;
  std::vector<int> parent_arc_;
  std::vector<int> queue_;
  std::vector<std::uint8_t> seen_;
};

bool connected(const Graph& g) {
  if (g.order() == 0) return false;
  return components(g, FaultSet{}).component_count() == 1;
}

}  // namespace

std::size_t local_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t limit, FaultSet* cut) {
  if (s >= g.order() || t >= g.order() || s == t) {
    throw ArgumentError("local_connectivity needs distinct vertices inside the graph");
  }
  if (g.adjacent(s, t)) throw ArgumentError("local_connectivity needs non-adjacent vertices");
  SplitNetwork net(g);
  const std::size_t flow = net.max_flow(s, t, limit);
  if (cut && flow < limit) *cut = FaultSet(net.separator(s));
  return flow;
}

ConnectivityResult vertex_connectivity(const Graph& g, PairScan scan) {
  if (!connected(g)) throw ArgumentError("vertex_connectivity needs a connected, non-empty graph");
  ConnectivityResult best;
  const std::size_t order = g.order();
  if (g.min_degree() + 1 == order) {
    best.value = order - 1;
    best.complete = true;
    return best;
  }
  SplitNetwork net(g);
  best.value = g.min_degree() + 1;  // above every possible answer
  const Vertex source_end = scan == PairScan::SingleSource ? 1 : static_cast<Vertex>(order);
  bool scanned = false;
  for (Vertex s = 0; s < source_end; ++s) {
    for (Vertex t = scan == PairScan::SingleSource ? 0 : s + 1; t < order; ++t) {
      if (t == s || g.adjacent(s, t)) continue;
      scanned = true;
      const std::size_t flow = net.max_flow(s, t, best.value);
      if (flow < best.value) {
        best.value = flow;
        best.source = s;
        best.target = t;
        best.min_cut = FaultSet(net.separator(s));
      }
    }
  }
  // Vertex 0 adjacent to everything in a non-complete graph: no target.
  if (!scanned && scan == PairScan::SingleSource) return vertex_connectivity(g, PairScan::AllPairs);
  return best;
}

}  // namespace cayconn
