#include "cayconn/components.hpp"

#include <algorithm>

#include "cayconn/errors.hpp"

namespace cayconn {

FaultSet::FaultSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool FaultSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::size_t CutAnalysis::cyclic_component_count() const {
  return static_cast<std::size_t>(std::count_if(components.begin(), components.end(),
                                                [](const auto& c) { return c.contains_cycle; }));
}

std::size_t CutAnalysis::largest() const {
  return components.empty() ? 0 : components[largest_index].vertex_count;
}

std::size_t CutAnalysis::min_survivor_degree() const {
  std::size_t d = 0;
  bool first = true;
  for (const auto& c : components) {
    if (first || c.min_degree < d) d = c.min_degree;
    first = false;
  }
  return d;
}

CutAnalysis components(const Graph& g, const FaultSet& f) {
  CutAnalysis out;
  out.component_of.assign(g.order(), -1);
  std::vector<bool> faulty(g.order(), false);
  for (Vertex v : f.members()) {
    if (v >= g.order()) {
      throw ArgumentError("fault vertex " + std::to_string(v) + " outside graph of order " +
                          std::to_string(g.order()));
    }
    faulty[v] = true;
  }
  out.survivors = g.order() - f.size();
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    if (faulty[s] || out.component_of[s] >= 0) continue;
    const auto id = static_cast<std::int32_t>(out.components.size());
    ComponentSummary comp;
    std::size_t degree_sum = 0;
    comp.min_degree = g.degree(s);
    queue.assign(1, s);
    out.component_of[s] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      std::size_t d = 0;
      for (Vertex w : g.neighbors(v)) {
        if (faulty[w]) continue;
        ++d;
        if (out.component_of[w] < 0) {
          out.component_of[w] = id;
          queue.push_back(w);
        }
      }
      degree_sum += d;
      comp.min_degree = std::min(comp.min_degree, d);
    }
    comp.vertex_count = queue.size();
    comp.edge_count = degree_sum / 2;
    comp.contains_cycle = comp.edge_count >= comp.vertex_count;
    if (comp.vertex_count <= kSmallComponentLimit) {
      comp.members = queue;
      std::sort(comp.members.begin(), comp.members.end());
    }
    if (comp.vertex_count > out.largest()) out.largest_index = static_cast<std::size_t>(id);
    out.components.push_back(std::move(comp));
  }
  return out;
}

}  // namespace cayconn
