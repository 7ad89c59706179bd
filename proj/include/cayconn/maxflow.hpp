#pragma once

#include <cstddef>

#include "cayconn/components.hpp"
#include "cayconn/graph.hpp"

namespace cayconn {

/// How vertex_connectivity chooses its (source, target) pairs.
enum class PairScan {
  SingleSource,  // source 0, every non-neighbor as target; exact for vertex-transitive graphs
  AllPairs,      // every non-adjacent pair; exact for any graph
};

struct ConnectivityResult {
  std::size_t value = 0;
  bool complete = false;  // complete graph: value = |V| - 1 by convention, no cut exists
  FaultSet min_cut;       // a minimum separating set (empty when complete)
  Vertex source = 0;
  Vertex target = 0;
};

/// Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent),
/// by unit-capacity augmenting paths on the vertex-split digraph. Stops once
/// `limit` paths are found. Fills `cut` with a minimum s-t separator when the
/// flow finished below the limit.
std::size_t local_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t limit = static_cast<std::size_t>(-1),
                               FaultSet* cut = nullptr);

/// Throws ArgumentError for a disconnected or empty graph.
ConnectivityResult vertex_connectivity(const Graph& g, PairScan scan = PairScan::SingleSource);

}  // namespace cayconn
