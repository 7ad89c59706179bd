#include "cayconn/topology.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "cayconn/errors.hpp"

namespace cayconn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token, std::string_view context) {
  int value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw ArgumentError("invalid integer '" + std::string(token) + "' in " + std::string(context));
  }
  return value;
}

std::vector<std::pair<int, int>> cycle_edges(int c) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < c; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, c);
  return e;
}

std::vector<std::pair<int, int>> parse_edge_list(std::string_view list) {
  std::vector<std::pair<int, int>> pairs;
  if (list.empty()) throw ArgumentError("empty edge list in 'edges:'");
  while (true) {
    const auto comma = list.find(',');
    const std::string_view token = trim(list.substr(0, comma));
    const auto dash = token.find('-');
    if (dash == std::string_view::npos) {
      throw ArgumentError("edge token '" + std::string(token) + "' is not of the form k-l");
    }
    pairs.emplace_back(parse_int(token.substr(0, dash), "edge '" + std::string(token) + "'"),
                       parse_int(token.substr(dash + 1), "edge '" + std::string(token) + "'"));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return pairs;
}

int parse_arity(std::string_view token, std::string_view preset) {
  const int n = parse_int(token, "'" + std::string(preset) + "'");
  if (n < 2) throw ArgumentError("arity '" + std::string(token) + "' in '" + std::string(preset) + "' must be >= 2");
  return n;
}

}  // namespace

Topology parse_topology(std::string_view text) {
  const std::string_view spec = trim(text);
  Topology t;
  t.spec = std::string(spec);
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw ArgumentError("topology '" + t.spec + "' has no preset prefix (expected mb:, bubble:, star:, ug:, edges:)");
  }
  const std::string_view head = spec.substr(0, colon);
  const std::string_view rest = spec.substr(colon + 1);

  if (head == "fixture") {
    if (rest != "mb4-corrupt") throw ArgumentError("unknown fixture '" + std::string(rest) + "'");
    t.generators = build_generating_graph(4, cycle_edges(4));
    t.corrupted = true;
  } else if (head == "mb") {
    const int n = parse_arity(rest, head);
    if (n < 3) throw ArgumentError("arity '" + std::string(rest) + "' in 'mb' must be >= 3");
    // The 3-cycle is a triangle; mb:3 is accepted as the degenerate preset.
    t.generators = build_generating_graph(n, cycle_edges(n), n == 3);
  } else if (head == "bubble") {
    const int n = parse_arity(rest, head);
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    t.generators = build_generating_graph(n, e);
  } else if (head == "star") {
    const int n = parse_arity(rest, head);
    std::vector<std::pair<int, int>> e;
    for (int i = 2; i <= n; ++i) e.emplace_back(1, i);
    t.generators = build_generating_graph(n, e);
  } else if (head == "ug") {
    const auto sep = rest.find(':');
    if (sep == std::string_view::npos || rest.substr(sep + 1, 2) != "c=") {
      throw ArgumentError("'ug' preset needs the form ug:<n>:c=<c>, got '" + t.spec + "'");
    }
    const int n = parse_arity(rest.substr(0, sep), head);
    const std::string_view ctoken = rest.substr(sep + 3);
    const int c = parse_int(ctoken, "'c='");
    if (c < 4 || c > n) {
      throw ArgumentError("cycle length 'c=" + std::string(ctoken) + "' must lie in [4, n]");
    }
    auto e = cycle_edges(c);
    for (int i = c; i < n; ++i) e.emplace_back(i, i + 1);
    t.generators = build_generating_graph(n, e);
  } else if (head == "edges") {
    const auto sep = rest.find_first_of(" \t;");
    const std::string_view list = trim(rest.substr(0, sep));
    auto pairs = parse_edge_list(list);
    int n = 0;
    if (sep != std::string_view::npos) {
      const std::string_view tail = trim(rest.substr(sep + 1));
      if (tail.substr(0, 2) != "n=") throw ArgumentError("unexpected token '" + std::string(tail) + "'; expected n=<n>");
      n = parse_int(tail.substr(2), "'n='");
    } else {
      for (auto [a, b] : pairs) n = std::max({n, a, b});
    }
    t.generators = build_generating_graph(n, std::move(pairs));
  } else {
    throw ArgumentError("unknown topology preset '" + std::string(head) + "'");
  }
  t.resolved = "edges:" + t.generators.edge_string() + " n=" + std::to_string(t.generators.n());
  if (t.corrupted) t.resolved += " fixture=mb4-corrupt";
  return t;
}

CayleyGraph materialize(const Topology& t) {
  auto g = CayleyGraph::build(t.generators);
  return t.corrupted ? with_shared_out_neighbor(g) : g;
}

CayleyGraph with_shared_out_neighbor(const CayleyGraph& g) {
  const Graph& graph = g.graph();
  const Vertex u = 0;
  const auto u_out = out_neighbors(g, u);
  if (u_out.empty()) throw ArgumentError("fixture needs a vertex with an out-neighbor");
  const Vertex x = u_out.front();
  for (Vertex v : g.block_vertices(g.block_of(u))) {
    if (v == u || graph.adjacent(v, x)) continue;
    const auto v_out = out_neighbors(g, v);
    if (v_out.empty()) continue;
    const Vertex y = v_out.front();
    std::vector<std::vector<Vertex>> adj(graph.order());
    for (Vertex a = 0; a < graph.order(); ++a) {
      auto nb = graph.neighbors(a);
      adj[a].assign(nb.begin(), nb.end());
    }
    auto drop = [&](Vertex a, Vertex b) { adj[a].erase(std::find(adj[a].begin(), adj[a].end(), b)); };
    drop(v, y);
    drop(y, v);
    adj[v].push_back(x);
    adj[x].push_back(v);
    return CayleyGraph::assemble(g.generators(), Graph::from_adjacency(std::move(adj)));
  }
  throw ArgumentError("fixture: no vertex available for rewiring");
}

}  // namespace cayconn
