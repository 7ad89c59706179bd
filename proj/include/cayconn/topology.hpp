#pragma once

// Flat topology strings for the command line:
//   mb:<n>            n-cycle generators (modified bubble-sort graph)
//   bubble:<n>        path generators (bubble-sort graph)
//   star:<n>          star generators centred at position 1
//   ug:<n>:c=<c>      cycle 1..c plus the pendant path c..n
//   edges:<k-l,...> n=<n>
//   fixture:mb4-corrupt

#include <string>
#include <string_view>

#include "cayconn/cayley.hpp"
#include "cayconn/genset.hpp"

namespace cayconn {

struct Topology {
  std::string spec;      // as given, trimmed
  std::string resolved;  // "edges:<list> n=<n>", plus the fixture tag if any
  GeneratingGraph generators;
  bool corrupted = false;
};

/// Throws ArgumentError for malformed text and ValidationError for a
/// rejected generating graph; messages quote the offending token.
Topology parse_topology(std::string_view text);

/// Builds the Cayley graph, applying the fixture corruption when requested.
/// Throws CapacityError for n > kMaxArity.
CayleyGraph materialize(const Topology& t);

/// Control fixture: rewires one cross edge of g so that two vertices of the
/// identity's block share an out-neighbor. Degrees stay equal except at the
/// two rewired endpoints.
CayleyGraph with_shared_out_neighbor(const CayleyGraph& g);

}  // namespace cayconn
