#pragma once

#include <string>

#include "cayconn/cayley.hpp"
#include "cayconn/graph.hpp"

namespace cayconn {

/// Largest order graph6 output supports here (single-byte size header).
inline constexpr std::size_t kGraph6MaxOrder = 62;

/// Standard graph6 line (no header, trailing newline). Throws CapacityError
/// above kGraph6MaxOrder vertices.
std::string to_graph6(const Graph& g);

/// Undirected DOT; vertex labels are one-line permutation strings.
std::string to_dot(const CayleyGraph& g, const std::string& name);

/// Header "n=<n> order=<n!> degree=<d>" then "u v" per edge with u < v.
std::string to_edge_list(const CayleyGraph& g);

}  // namespace cayconn
