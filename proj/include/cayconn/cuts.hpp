#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cayconn/cayley.hpp"
#include "cayconn/components.hpp"
#include "cayconn/graph.hpp"

namespace cayconn {

enum class CutKind { Vertex, GoodNeighbor, Cyclic };

/// Which predicate a fault set must satisfy.
struct CutCriterion {
  CutKind kind = CutKind::Vertex;
  int g = 0;  // GoodNeighbor only

  static CutCriterion vertex() { return {CutKind::Vertex, 0}; }
  static CutCriterion good_neighbor(int g) { return {CutKind::GoodNeighbor, g}; }
  static CutCriterion cyclic() { return {CutKind::Cyclic, 0}; }

  /// "vertex-cut", "good-neighbor-cut(2)", "cyclic-cut".
  std::string to_string() const;
  bool holds(const CutAnalysis& a) const;
};

struct CutWitness {
  FaultSet fault_set;
  CutCriterion criterion;
  CutAnalysis analysis;
};

/// Worker count: CAYCONN_WORKERS if set to a positive integer, else the
/// hardware concurrency (at least 1).
unsigned default_workers();

struct SearchOptions {
  unsigned workers = default_workers();
};

bool is_vertex_cut(const Graph& g, const FaultSet& f);
bool is_cyclic_cut(const Graph& g, const FaultSet& f);
/// Degrees are counted over every survivor, on both sides of the cut.
bool is_good_neighbor_cut(const Graph& g, const FaultSet& f, int good);

/// Smallest fault set of size <= max_size satisfying `criterion`, scanning
/// sizes upward and subsets lexicographically; the lexicographically least
/// minimum witness is returned regardless of worker count.
std::optional<CutWitness> min_cut_exhaustive(const Graph& g, CutCriterion criterion, std::size_t max_size,
                                             const SearchOptions& opts = {});

inline std::optional<CutWitness> min_cyclic_cut_exhaustive(const Graph& g, std::size_t max_size,
                                                           const SearchOptions& opts = {}) {
  return min_cut_exhaustive(g, CutCriterion::cyclic(), max_size, opts);
}
inline std::optional<CutWitness> min_good_neighbor_cut_exhaustive(const Graph& g, int good, std::size_t max_size,
                                                                  const SearchOptions& opts = {}) {
  return min_cut_exhaustive(g, CutCriterion::good_neighbor(good), max_size, opts);
}

/// N(V(C)) \ V(C). Throws ArgumentError unless C is a 4-cycle of g.
FaultSet build_cycle_neighborhood_cut(const Graph& g, const FourCycle& c);

/// Seeded stochastic search for a cyclic cut of size <= target_size. Each
/// trial builds a candidate from a random 4-cycle neighborhood, a perturbed
/// one, or the neighborhood of a greedily grown low-expansion region. The
/// witness with the smallest trial index is returned, so the result depends
/// only on (graph, target_size, trials, seed).
std::optional<CutWitness> randomized_cut_falsifier(const Graph& g, std::size_t target_size, std::uint64_t trials,
                                                   std::uint64_t seed, const SearchOptions& opts = {});

struct ComponentProfile {
  std::size_t largest = 0;
  std::size_t residual = 0;

  bool operator==(const ComponentProfile&) const = default;
};

ComponentProfile large_component_profile(const Graph& g, const FaultSet& f);

}  // namespace cayconn
