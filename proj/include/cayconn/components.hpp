#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cayconn/graph.hpp"

namespace cayconn {

/// A set of faulty vertices, kept sorted and duplicate-free.
class FaultSet {
 public:
  FaultSet() = default;
  explicit FaultSet(std::vector<Vertex> members);

  const std::vector<Vertex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;

  auto operator<=>(const FaultSet& o) const {
    if (auto c = members_.size() <=> o.members_.size(); c != 0) return c;
    return members_ <=> o.members_;
  }
  bool operator==(const FaultSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

/// Components with at most this many vertices keep their member list.
inline constexpr std::size_t kSmallComponentLimit = 64;

struct ComponentSummary {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  bool contains_cycle = false;  // edge_count >= vertex_count
  std::size_t min_degree = 0;   // inside G - F
  std::vector<Vertex> members;  // only when vertex_count <= kSmallComponentLimit
};

/// Component structure of G - F. Components are ordered by their smallest
/// vertex.
struct CutAnalysis {
  std::vector<ComponentSummary> components;
  std::vector<std::int32_t> component_of;  // -1 for faulty vertices
  std::size_t largest_index = 0;
  std::size_t survivors = 0;

  std::size_t component_count() const { return components.size(); }
  bool disconnected() const { return components.size() >= 2; }
  std::size_t cyclic_component_count() const;
  std::size_t largest() const;
  std::size_t residual() const { return survivors - largest(); }
  std::size_t min_survivor_degree() const;
};

/// Iterative traversal; throws ArgumentError when F mentions a vertex outside G.
CutAnalysis components(const Graph& g, const FaultSet& f);

}  // namespace cayconn
