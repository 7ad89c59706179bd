#include "cayconn/genset.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "cayconn/errors.hpp"

namespace cayconn {

namespace {

std::string pair_token(int a, int b) { return std::to_string(a) + "-" + std::to_string(b); }

bool connected(int n, const std::vector<Transposition>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e.k)].push_back(e.l);
    adj[static_cast<std::size_t>(e.l)].push_back(e.k);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

bool has_triangle(const GeneratingGraph& g) {
  for (int a = 1; a <= g.n(); ++a) {
    for (int b = a + 1; b <= g.n(); ++b) {
      if (!g.has_edge(a, b)) continue;
      for (int c = b + 1; c <= g.n(); ++c) {
        if (g.has_edge(a, c) && g.has_edge(b, c)) return true;
      }
    }
  }
  return false;
}

}  // namespace

std::string Transposition::to_string() const {
  return "(" + std::to_string(k) + " " + std::to_string(l) + ")";
}

std::string_view to_string(GenClass c) {
  switch (c) {
    case GenClass::Star: return "Star";
    case GenClass::Path: return "Path";
    case GenClass::OtherTree: return "OtherTree";
    case GenClass::Cycle: return "Cycle";
    case GenClass::UnicyclicTriangleFree: return "UnicyclicTriangleFree";
    case GenClass::Other: return "Other";
  }
  return "Other";
}

int GeneratingGraph::degree(int position) const {
  int d = 0;
  for (const auto& e : edges_) d += (e.k == position) + (e.l == position);
  return d;
}

std::vector<int> GeneratingGraph::neighbors(int position) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.k == position) out.push_back(e.l);
    if (e.l == position) out.push_back(e.k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool GeneratingGraph::has_edge(int a, int b) const {
  Transposition t{std::min(a, b), std::max(a, b)};
  return std::binary_search(edges_.begin(), edges_.end(), t);
}

std::string GeneratingGraph::edge_string() const {
  std::string out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out += ',';
    out += pair_token(edges_[i].k, edges_[i].l);
  }
  return out;
}

GeneratingGraph build_generating_graph(int n, std::vector<std::pair<int, int>> pairs,
                                       bool allow_triangle) {
  if (n < 2) throw ArgumentError("generating graph needs n >= 2, got " + std::to_string(n));
  GeneratingGraph g;
  g.n_ = n;
  std::set<Transposition> seen;
  for (auto [a, b] : pairs) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw ValidationError("pair " + pair_token(a, b) + " outside positions [1, " +
                            std::to_string(n) + "]");
    }
    if (a == b) throw ValidationError("pair " + pair_token(a, b) + " is a loop");
    Transposition t{std::min(a, b), std::max(a, b)};
    if (!seen.insert(t).second) throw ValidationError("pair " + pair_token(a, b) + " repeated");
  }
  g.edges_.assign(seen.begin(), seen.end());
  if (!connected(n, g.edges_)) {
    throw ValidationError("generating graph on " + std::to_string(n) +
                          " positions is disconnected and does not generate Sym(" +
                          std::to_string(n) + ")");
  }
  const auto m = static_cast<int>(g.edges_.size());
  if (m == n && has_triangle(g) && !allow_triangle) {
    throw ValidationError("unicyclic generating graph contains a triangle; its cycle must have length >= 4");
  }
  g.class_ = classify(g);
  return g;
}

GenClass classify(const GeneratingGraph& g) {
  const int n = g.n();
  const auto m = static_cast<int>(g.edges().size());
  if (m == n - 1) {
    int leaves = 0;
    int max_degree = 0;
    for (int p = 1; p <= n; ++p) {
      const int d = g.degree(p);
      leaves += d == 1;
      max_degree = std::max(max_degree, d);
    }
    if (leaves == 2) return GenClass::Path;
    if (max_degree == n - 1) return GenClass::Star;
    return GenClass::OtherTree;
  }
  if (m == n && !has_triangle(g)) {
    for (int p = 1; p <= n; ++p) {
      if (g.degree(p) != 2) return GenClass::UnicyclicTriangleFree;
    }
    return GenClass::Cycle;
  }
  return GenClass::Other;
}

PeelChoice choose_peel(const GeneratingGraph& g) {
  const int n = g.n();
  if (g.cls() != GenClass::Cycle) {
    for (int p = n; p >= 1; --p) {
      if (g.degree(p) == 1) return {p, g.neighbors(p)};
    }
  }
  return {n, g.neighbors(n)};
}

bool PositionMap::is_identity() const {
  for (std::size_t p = 1; p < image.size(); ++p) {
    if (image[p] != static_cast<int>(p)) return false;
  }
  return true;
}

std::pair<GeneratingGraph, PositionMap> relabel_to_canonical(const GeneratingGraph& g) {
  const int n = g.n();
  const int peel = choose_peel(g).position;
  PositionMap map;
  map.image.resize(static_cast<std::size_t>(n) + 1);
  for (int p = 0; p <= n; ++p) map.image[static_cast<std::size_t>(p)] = p;
  std::swap(map.image[static_cast<std::size_t>(peel)], map.image[static_cast<std::size_t>(n)]);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : g.edges()) pairs.emplace_back(map(e.k), map(e.l));
  return {build_generating_graph(n, std::move(pairs), g.cls() == GenClass::Other), std::move(map)};
}

int generator_girth(const GeneratingGraph& g) {
  const int n = g.n();
  int best = 0;
  for (int s = 1; s <= n; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(n) + 1, -1);
    std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
    std::queue<int> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          parent[static_cast<std::size_t>(w)] = v;
          q.push(w);
        } else if (parent[static_cast<std::size_t>(v)] != w) {
          int len = dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(w)] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace cayconn
