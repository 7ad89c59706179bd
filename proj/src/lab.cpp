#include "cayconn/lab.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cayconn/detail/masks.hpp"
#include "cayconn/detail/parallel.hpp"
#include "cayconn/errors.hpp"
#include "cayconn/maxflow.hpp"
#include "cayconn/version.hpp"

namespace cayconn::lab {
namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kChunk = 1024;
constexpr std::uint64_t kExhaustiveLimit = 10'000'000;
constexpr std::uint64_t kTemplateLimit = 2'000'000;

// Independent random streams per sampled check.
enum Stream : std::uint64_t { kNeighborStream = 11, kComponentStream = 12, kFalsifyStream = 13 };

template <class F>
CheckRecord timed(F&& f) {
  const auto t0 = Clock::now();
  CheckRecord r = f();
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  return r;
}

CheckRecord make_record(std::string id, std::string claim) {
  CheckRecord r;
  r.id = std::move(id);
  r.claim = std::move(claim);
  return r;
}

void conclude(CheckRecord& r, bool ok, bool exhaustive) {
  if (ok) {
    r.verdict = exhaustive ? Verdict::ProvedExhaustive : Verdict::SupportedSampled;
  } else {
    r.verdict = Verdict::Fail;
    if (r.counterexample.is_null()) throw std::logic_error(r.id + ": failure without counterexample");
  }
}

CheckRecord skipped(std::string id, std::string reason) {
  CheckRecord r;
  r.id = std::move(id);
  r.scope = std::move(reason);
  r.verdict = Verdict::Skipped;
  r.gating = false;
  return r;
}

json named(const VertexNamer& name, std::span<const Vertex> vs) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(name(v));
  return a;
}

json named(const VertexNamer& name, const FaultSet& f) { return named(name, f.members()); }

json component_sizes(const CutAnalysis& a) {
  json sizes = json::array();
  for (const auto& c : a.components) sizes.push_back(c.vertex_count);
  return sizes;
}

std::uint64_t subsets_up_to(std::uint64_t universe, std::uint64_t max_size) {
  std::uint64_t total = 0;
  for (std::uint64_t k = 0; k <= max_size && k <= universe; ++k) {
    const std::uint64_t c = detail::binomial(universe, k);
    if (total > std::numeric_limits<std::uint64_t>::max() - c) return std::numeric_limits<std::uint64_t>::max();
    total += c;
  }
  return total;
}

std::string count_text(std::uint64_t x) { return std::to_string(x); }

// Sorted neighbor-of-neighbor sets: second[v] = {s != v : cn(s, v) > 0}.
std::vector<std::vector<Vertex>> distance_two_sets(const Graph& g) {
  std::vector<std::vector<Vertex>> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto& s = out[v];
    for (Vertex w : g.neighbors(v)) {
      for (Vertex x : g.neighbors(w)) {
        if (x != v) s.push_back(x);
      }
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return out;
}

bool contains_sorted(const std::vector<Vertex>& v, Vertex x) { return std::binary_search(v.begin(), v.end(), x); }

// Per-size tallies of an exhaustive fault-set scan plus the first violation
// in (size, lexicographic) order.
struct Census {
  std::vector<std::uint64_t> scanned;
  std::vector<std::uint64_t> disconnecting;
  std::vector<std::uint64_t> worst_residual;
  std::uint64_t violations = 0;
  std::vector<Vertex> first_violation;
  detail::CutProfile violation_profile;

  void ensure(std::size_t k) {
    if (scanned.size() <= k) {
      scanned.resize(k + 1, 0);
      disconnecting.resize(k + 1, 0);
      worst_residual.resize(k + 1, 0);
    }
  }
  void record(std::span<const Vertex> f, const detail::CutProfile& p, bool violates) {
    const std::size_t k = f.size();
    ensure(k);
    ++scanned[k];
    if (p.disconnected()) {
      ++disconnecting[k];
      worst_residual[k] = std::max<std::uint64_t>(worst_residual[k], p.residual());
    }
    if (violates) {
      if (violations == 0) {
        first_violation.assign(f.begin(), f.end());
        violation_profile = p;
      }
      ++violations;
    }
  }
  void merge(const Census& o) {
    if (!o.scanned.empty()) ensure(o.scanned.size() - 1);
    for (std::size_t k = 0; k < o.scanned.size(); ++k) {
      scanned[k] += o.scanned[k];
      disconnecting[k] += o.disconnecting[k];
      worst_residual[k] = std::max(worst_residual[k], o.worst_residual[k]);
    }
    if (violations == 0 && o.violations > 0) {
      first_violation = o.first_violation;
      violation_profile = o.violation_profile;
    }
    violations += o.violations;
  }
  std::uint64_t total_scanned() const {
    std::uint64_t t = 0;
    for (auto x : scanned) t += x;
    return t;
  }
};

// Exhaustive scan of every F with |F| <= max_size. violates(k, profile)
// decides whether F breaks the claim.
template <class Violates>
Census fault_census(const Graph& g, std::size_t max_size, unsigned workers, Violates violates) {
  Census total;
  const auto universe = static_cast<std::uint32_t>(g.order());
  detail::with_analyzer(g, [&](auto make) {
    for (std::size_t k = 0; k <= max_size && k <= universe; ++k) {
      if (k == 0) {
        auto a = make();
        const auto p = a.analyze(std::span<const Vertex>{});
        Census c;
        c.record({}, p, violates(std::size_t{0}, p));
        total.merge(c);
        continue;
      }
      auto parts = detail::run_parts(
          universe, workers, [&] { return std::pair{make(), std::vector<Vertex>{}}; },
          [&](auto& st, std::size_t part) {
            Census c;
            c.ensure(k);
            detail::for_each_subset_from(universe, k, static_cast<Vertex>(part), st.second,
                                         [&](std::span<const Vertex> f) {
                                           const auto p = st.first.analyze(f);
                                           c.record(f, p, violates(k, p));
                                           return true;
                                         });
            return c;
          });
      for (const auto& c : parts) total.merge(c);
    }
    return 0;
  });
  return total;
}

json profile_json(const detail::CutProfile& p) {
  return json{{"components", p.components}, {"largest", p.largest}, {"residual", p.residual()}};
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Local 4-set: grown by random walks of length one or two from members.
std::vector<Vertex> sample_local_set(const Graph& g, std::size_t size, std::mt19937_64& rng) {
  std::uniform_int_distribution<Vertex> pick_vertex(0, static_cast<Vertex>(g.order() - 1));
  std::vector<Vertex> s{pick_vertex(rng)};
  for (int guard = 0; s.size() < size && guard < 64; ++guard) {
    Vertex x = s[std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng)];
    const int steps = std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? 2 : 1;
    for (int i = 0; i < steps; ++i) {
      auto nb = g.neighbors(x);
      x = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)];
    }
    if (std::find(s.begin(), s.end(), x) == s.end()) s.push_back(x);
  }
  std::sort(s.begin(), s.end());
  return s;
}

std::string class_name(const CayleyGraph& g) { return std::string(to_string(g.generators().cls())); }

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::ProvedExhaustive:
      return "PROVED-EXHAUSTIVE";
    case Verdict::SupportedSampled:
      return "SUPPORTED-SAMPLED";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Skipped:
      return "SKIPPED";
  }
  return "SKIPPED";
}

bool VerificationReport::any_gating_failure() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.failed() && c.gating; });
}

VertexNamer decimal_names() {
  return [](Vertex v) { return std::to_string(v); };
}

VertexNamer permutation_names(const CayleyGraph& g) {
  return [&g](Vertex v) { return g.label(v); };
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {
      "cn-bound",           "connectivity",       "cross-edges",        "out-neighbor-disjoint",
      "out-neighbor-escape", "edge-cn-exclusion", "cn-triple-exclusion", "isolated-vertex",
      "large-component",    "neighbor-lower-bound", "component-bound-p1", "component-bound-p2",
      "four-cycle-labels",  "last-block-attachment", "good-neighbor-exact", "cyclic-exact",
      "cyclic-upper",       "cyclic-falsify"};
  return ids;
}

CheckRecord check_cn_bound(const Graph& g, const VertexNamer& name, std::size_t bound) {
  return timed([&] {
    auto r = make_record("cn-bound", "every pair of distinct vertices has at most " + std::to_string(bound) +
                                         " common neighbors");
    const std::uint64_t order = g.order();
    const std::uint64_t pairs = order * (order - 1) / 2;
    r.scope = "exhaustive over all " + count_text(pairs) + " unordered pairs";
    std::vector<std::uint32_t> cnt(order, 0);
    std::vector<Vertex> touched;
    std::map<std::uint32_t, std::uint64_t> histogram;
    std::uint32_t best = 0;
    std::pair<Vertex, Vertex> best_pair{0, 0};
    std::optional<std::pair<Vertex, Vertex>> bad;
    std::uint64_t violations = 0;
    std::uint64_t positive = 0;
    for (Vertex u = 0; u < order; ++u) {
      touched.clear();
      for (Vertex w : g.neighbors(u)) {
        for (Vertex x : g.neighbors(w)) {
          if (x <= u) continue;
          if (cnt[x]++ == 0) touched.push_back(x);
        }
      }
      std::sort(touched.begin(), touched.end());
      for (Vertex x : touched) {
        const std::uint32_t c = cnt[x];
        cnt[x] = 0;
        ++histogram[c];
        ++positive;
        if (c > best) {
          best = c;
          best_pair = {u, x};
        }
        if (c > bound) {
          if (!bad) bad = std::pair{u, x};
          ++violations;
        }
      }
    }
    histogram[0] += pairs - positive;
    json hist = json::object();
    for (auto [c, k] : histogram) hist[std::to_string(c)] = k;
    r.details = {{"max_cn", best}, {"bound", bound}, {"pairs", pairs}, {"histogram", hist}, {"violations", violations}};
    if (best > 0) {
      r.witness = {{"u", name(best_pair.first)},
                   {"v", name(best_pair.second)},
                   {"cn", best}};
    }
    if (bad) {
      r.counterexample = {{"u", name(bad->first)},
                          {"v", name(bad->second)},
                          {"cn", common_neighbor_count(g, bad->first, bad->second)}};
    }
    conclude(r, !bad, true);
    return r;
  });
}

CheckRecord check_edge_cn_exclusion(const Graph& g, const VertexNamer& name) {
  return timed([&] {
    auto r = make_record("edge-cn-exclusion",
                         "for every edge pq and every other vertex s, cn(s,p) = 0 or cn(s,q) = 0");
    const auto second = distance_two_sets(g);
    const std::uint64_t edges = g.size();
    r.scope = "exhaustive over " + count_text(edges) + " edges x " + count_text(g.order() - 2) + " third vertices";
    std::uint64_t violations = 0;
    for (Vertex p = 0; p < g.order(); ++p) {
      for (Vertex q : g.neighbors(p)) {
        if (q <= p) continue;
        const auto& a = second[p];
        const auto& b = second[q];
        std::vector<Vertex> both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        for (Vertex s : both) {
          if (s == p || s == q) continue;
          if (violations++ == 0) {
            r.counterexample = {{"p", name(p)},
                                {"q", name(q)},
                                {"s", name(s)},
                                {"cn_sp", common_neighbor_count(g, s, p)},
                                {"cn_sq", common_neighbor_count(g, s, q)}};
          }
        }
      }
    }
    r.details = {{"edges", edges}, {"violations", violations}};
    conclude(r, violations == 0, true);
    return r;
  });
}

CheckRecord check_cn_triple_exclusion(const Graph& g, const VertexNamer& name) {
  return timed([&] {
    auto r = make_record("cn-triple-exclusion",
                         "no distinct u, v, w with cn(u,v) = 2, cn(v,w) = 2 and cn(u,w) >= 1");
    const std::uint64_t order = g.order();
    r.scope = "exhaustive over all " + count_text(detail::binomial(order, 3)) + " vertex triples";
    const auto second = distance_two_sets(g);
    std::uint64_t twin_pairs = 0;
    std::uint64_t configurations = 0;
    std::uint64_t violations = 0;
    std::vector<Vertex> twos;
    for (Vertex v = 0; v < order; ++v) {
      twos.clear();
      for (Vertex x : second[v]) {
        if (common_neighbor_count(g, v, x) == 2) twos.push_back(x);
      }
      twin_pairs += twos.size();
      for (std::size_t i = 0; i < twos.size(); ++i) {
        for (std::size_t j = i + 1; j < twos.size(); ++j) {
          ++configurations;
          const Vertex u = twos[i];
          const Vertex w = twos[j];
          if (!contains_sorted(second[u], w)) continue;
          if (violations++ == 0) {
            r.counterexample = {{"u", name(u)},
                                {"v", name(v)},
                                {"w", name(w)},
                                {"cn_uv", 2},
                                {"cn_vw", 2},
                                {"cn_uw", common_neighbor_count(g, u, w)}};
          }
        }
      }
    }
    r.details = {{"pairs_with_cn_2", twin_pairs / 2},
                 {"configurations", configurations},
                 {"violations", violations},
                 {"reading", "the outer pair u, w of two cn-2 pairs sharing v must have no common neighbor"}};
    conclude(r, violations == 0, true);
    return r;
  });
}

CheckRecord check_isolated_vertex(const Graph& g, const LabOptions& opts, const VertexNamer& name) {
  return timed([&] {
    auto r = make_record("isolated-vertex",
                         "every disconnecting F with |F| <= 5 leaves exactly two components, one an isolated vertex");
    constexpr std::size_t kMax = 5;
    const std::uint64_t total = subsets_up_to(g.order(), kMax);
    if (total > 50 * kExhaustiveLimit) return skipped(r.id, "graph too large for exhaustive scan");
    r.scope = "exhaustive over all " + count_text(total) + " subsets with |F| <= 5";
    const auto census = fault_census(g, kMax, opts.workers, [](std::size_t, const detail::CutProfile& p) {
      return p.disconnected() && !(p.components == 2 && p.residual() == 1);
    });
    std::set<std::vector<Vertex>> neighborhoods;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 4) {
        auto nb = g.neighbors(v);
        neighborhoods.emplace(nb.begin(), nb.end());
      }
    }
    std::uint64_t disconnecting = 0;
    std::optional<std::size_t> min_size;
    for (std::size_t k = 0; k < census.disconnecting.size(); ++k) {
      disconnecting += census.disconnecting[k];
      if (!min_size && census.disconnecting[k] > 0) min_size = k;
    }
    const std::uint64_t size4 = census.disconnecting.size() > 4 ? census.disconnecting[4] : 0;
    r.details = {{"disconnecting_by_size", census.disconnecting},
                 {"disconnecting_total", disconnecting},
                 {"min_disconnecting_size", min_size ? json(*min_size) : json(nullptr)},
                 {"size4_all_neighborhoods", size4 == neighborhoods.size()},
                 {"violations", census.violations}};
    if (census.violations > 0) {
      r.counterexample = {{"fault_set", named(name, census.first_violation)},
                          {"profile", profile_json(census.violation_profile)}};
    }
    conclude(r, census.violations == 0, true);
    return r;
  });
}

CheckRecord check_large_component_bounds(const Graph& g, const LabOptions& opts, const VertexNamer& name) {
  return timed([&] {
    auto r = make_record("large-component",
                         "disconnecting F leaves at most 2 vertices outside the largest component when |F| <= 6 "
                         "and at most 3 when |F| <= 7");
    constexpr std::size_t kMax = 7;
    const std::uint64_t total = subsets_up_to(g.order(), kMax);
    if (total > 50 * kExhaustiveLimit) return skipped(r.id, "graph too large for exhaustive scan");
    r.scope = "exhaustive over all " + count_text(total) + " subsets with |F| <= 7";
    const auto census = fault_census(g, kMax, opts.workers, [](std::size_t k, const detail::CutProfile& p) {
      if (!p.disconnected()) return false;
      return p.residual() > (k <= 6 ? 2U : 3U);
    });
    r.details = {{"disconnecting_by_size", census.disconnecting},
                 {"worst_residual_by_size", census.worst_residual},
                 {"violations", census.violations}};
    if (census.violations > 0) {
      r.counterexample = {{"fault_set", named(name, census.first_violation)},
                          {"profile", profile_json(census.violation_profile)}};
    }
    conclude(r, census.violations == 0, true);
    return r;
  });
}

CheckRecord check_connectivity_values(const CayleyGraph& g) {
  return timed([&] {
    const auto& gen = g.generators();
    const std::size_t expected = gen.edges().size();
    std::string claim = "vertex connectivity equals the degree " + std::to_string(expected);
    if (gen.is_tree()) claim += " (n - 1 for tree generators)";
    if (gen.is_unicyclic()) claim += " (n for unicyclic generators)";
    auto r = make_record("connectivity", claim);
    const auto single = vertex_connectivity(g.graph(), PairScan::SingleSource);
    std::optional<std::size_t> all_pairs;
    if (g.order() <= 120) all_pairs = vertex_connectivity(g.graph(), PairScan::AllPairs).value;
    r.scope = all_pairs ? "max-flow from the identity to every non-neighbor, cross-checked over all vertex pairs"
                        : "max-flow from the identity to every non-neighbor (vertex-transitive)";
    const auto name = permutation_names(g);
    r.details = {{"kappa", single.value},
                 {"expected", expected},
                 {"all_pairs", all_pairs ? json(*all_pairs) : json(nullptr)},
                 {"complete", single.complete}};
    if (!single.complete) {
      r.witness = {{"source", name(single.source)},
                   {"target", name(single.target)},
                   {"min_cut", named(name, single.min_cut)}};
    }
    const bool ok = single.value == expected && (!all_pairs || *all_pairs == single.value);
    if (!ok) {
      r.counterexample = {{"kappa", single.value},
                          {"all_pairs", all_pairs ? json(*all_pairs) : json(nullptr)},
                          {"min_cut", named(name, single.min_cut)}};
    }
    conclude(r, ok, true);
    return r;
  });
}

CheckRecord check_cross_edges(const CayleyGraph& g) {
  return timed([&] {
    const int n = g.n();
    const std::size_t anchors = g.peel().anchors.size();
    const std::uint64_t expected = anchors * factorial(n - 2);
    auto r = make_record("cross-edges", "every pair of distinct blocks is joined by exactly " +
                                            std::to_string(expected) + " edges");
    r.scope = "exhaustive over all " + std::to_string(n * (n - 1) / 2) + " block pairs";
    std::uint64_t total = 0;
    std::set<std::uint64_t> counts;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const auto e = cross_edges(g, i, j);
        const std::uint64_t c = e.edges.size();
        counts.insert(c);
        total += c;
        if (c != expected && r.counterexample.is_null()) {
          r.counterexample = {{"i", i}, {"j", j}, {"count", c}, {"expected", expected}};
        }
      }
    }
    std::uint64_t between = 0;
    for (auto [u, v] : g.graph().edge_list()) {
      if (g.block_of(u) != g.block_of(v)) ++between;
    }
    const std::uint64_t expected_total = factorial(n) * anchors / 2;
    if (r.counterexample.is_null() && (total != between || total != expected_total)) {
      r.counterexample = {{"sum_over_pairs", total}, {"cross_edges", between}, {"expected", expected_total}};
    }
    r.details = {{"peel_position", g.peel().position},
                 {"per_pair_expected", expected},
                 {"per_pair_counts", counts},
                 {"total_cross_edges", between}};
    conclude(r, r.counterexample.is_null(), true);
    return r;
  });
}

CheckRecord check_out_neighbor_disjointness(const CayleyGraph& g) {
  return timed([&] {
    auto r = make_record("out-neighbor-disjoint",
                         "distinct vertices of one block have disjoint sets of out-neighbors");
    const int n = g.n();
    const std::uint64_t block_size = factorial(n - 1);
    r.scope = "exhaustive over " + std::to_string(n) + " blocks x " + count_text(detail::binomial(block_size, 2)) +
              " vertex pairs";
    const auto name = permutation_names(g);
    std::vector<std::int64_t> owner(g.order(), -1);
    std::vector<int> stamp(g.order(), 0);
    std::map<std::size_t, std::uint64_t> sizes;
    std::uint64_t violations = 0;
    for (int b = 1; b <= n; ++b) {
      for (Vertex u : g.block_vertices(b)) {
        const auto outs = out_neighbors(g, u);
        ++sizes[outs.size()];
        for (Vertex x : outs) {
          if (stamp[x] == b && owner[x] != u) {
            if (violations++ == 0) {
              r.counterexample = {{"u", name(static_cast<Vertex>(owner[x]))},
                                  {"v", name(u)},
                                  {"shared", name(x)},
                                  {"block", b}};
            }
            continue;
          }
          stamp[x] = b;
          owner[x] = u;
        }
      }
    }
    json hist = json::object();
    for (auto [s, k] : sizes) hist[std::to_string(s)] = k;
    r.details = {{"out_degree_histogram", hist}, {"violations", violations}};
    conclude(r, violations == 0, true);
    return r;
  });
}

CheckRecord check_out_neighbor_escape(const CayleyGraph& g) {
  return timed([&] {
    auto r = make_record("out-neighbor-escape",
                         "every vertex of blocks 1 and 2 has an out-neighbor in blocks 3..n");
    const auto name = permutation_names(g);
    std::uint64_t scanned = 0;
    for (int b = 1; b <= 2; ++b) {
      for (Vertex u : g.block_vertices(b)) {
        ++scanned;
        const auto outs = out_neighbors(g, u);
        const bool escapes = std::any_of(outs.begin(), outs.end(), [&](Vertex x) { return g.block_of(x) >= 3; });
        if (!escapes && r.counterexample.is_null()) {
          r.counterexample = {{"u", name(u)}, {"out_neighbors", named(name, outs)}};
        }
      }
    }
    r.scope = "exhaustive over all " + count_text(scanned) + " vertices of blocks 1 and 2";
    r.details = {{"scanned", scanned}};
    conclude(r, r.counterexample.is_null(), true);
    return r;
  });
}

CheckRecord check_neighbor_lower_bound(const CayleyGraph& g, const LabOptions& opts) {
  return timed([&] {
    const int n = g.n();
    const std::uint32_t sharp = static_cast<std::uint32_t>(4 * n - 8);
    const auto name = permutation_names(g);
    const Graph& graph = g.graph();
    const auto universe = static_cast<std::uint32_t>(g.order());
    struct Best {
      std::uint32_t size = std::numeric_limits<std::uint32_t>::max();
      std::vector<Vertex> set;
      void offer(std::uint32_t s, std::span<const Vertex> v) {
        if (s < size) {
          size = s;
          set.assign(v.begin(), v.end());
        }
      }
      void merge(const Best& o) {
        if (o.size < size) *this = o;
      }
    };
    std::optional<std::uint32_t> cycle_nbhd;
    if (auto c = first_4cycle(graph)) {
      detail::with_analyzer(graph, [&](auto make) {
        auto a = make();
        cycle_nbhd = a.neighborhood_size(std::span<const Vertex>(c->data(), 4));
        return 0;
      });
    }
    const bool exhaustive = detail::binomial(universe, 4) <= 10 * kExhaustiveLimit && universe <= 128;
    Best best;
    CheckRecord r;
    if (exhaustive) {
      r = make_record("neighbor-lower-bound", "every 4-set S has |N(S)| >= " + std::to_string(sharp) +
                                                  " and some 4-set attains it");
      r.scope = "exhaustive over all " + count_text(detail::binomial(universe, 4)) + " 4-subsets";
      detail::with_analyzer(graph, [&](auto make) {
        auto parts = detail::run_parts(
            universe, opts.workers, [&] { return std::pair{make(), std::vector<Vertex>{}}; },
            [&](auto& st, std::size_t part) {
              Best b;
              detail::for_each_subset_from(universe, 4, static_cast<Vertex>(part), st.second,
                                           [&](std::span<const Vertex> s) {
                                             b.offer(st.first.neighborhood_size(s), s);
                                             return true;
                                           });
              return b;
            });
        for (const auto& b : parts) best.merge(b);
        return 0;
      });
    } else {
      const std::uint32_t floor = sharp - 1;
      r = make_record("neighbor-lower-bound", "every 4-set S has |N(S)| >= " + std::to_string(floor));
      r.scope = "sampled " + count_text(opts.trials) + " local 4-sets with seed " + std::to_string(opts.seed);
      const std::uint64_t stream = detail::mix_seed(opts.seed, kNeighborStream);
      const std::uint64_t chunks = (opts.trials + kChunk - 1) / kChunk;
      detail::with_analyzer(graph, [&](auto make) {
        auto parts = detail::run_parts(chunks, opts.workers, [&] { return make(); },
                                       [&](auto& analyzer, std::size_t chunk) {
                                         Best b;
                                         std::mt19937_64 rng(detail::mix_seed(stream, chunk));
                                         const std::uint64_t lo = chunk * kChunk;
                                         const std::uint64_t hi = std::min(opts.trials, lo + kChunk);
                                         for (std::uint64_t t = lo; t < hi; ++t) {
                                           const auto s = sample_local_set(graph, 4, rng);
                                           if (s.size() < 4) continue;
                                           b.offer(analyzer.neighborhood_size(s), s);
                                         }
                                         return b;
                                       });
        for (const auto& b : parts) best.merge(b);
        return 0;
      });
    }
    r.details = {{"min_neighborhood", best.set.empty() ? json(nullptr) : json(best.size)},
                 {"sharp_value", sharp},
                 {"four_cycle_neighborhood", cycle_nbhd ? json(*cycle_nbhd) : json(nullptr)}};
    if (exhaustive) {
      r.details["subsets"] = detail::binomial(universe, 4);
    } else {
      r.details["trials"] = opts.trials;
      r.details["seed"] = opts.seed;
    }
    const bool ok = exhaustive ? best.size == sharp : best.size >= sharp - 1;
    if (!best.set.empty()) {
      const json entry = {{"set", named(name, best.set)}, {"neighborhood_size", best.size}};
      if (ok) {
        r.witness = entry;
      } else {
        r.counterexample = entry;
      }
    }
    conclude(r, ok, exhaustive);
    return r;
  });
}

CheckRecord check_component_bound_p(const CayleyGraph& g, int p, const LabOptions& opts) {
  const int n = g.n();
  if (p < 1 || p > n - 2) throw ArgumentError("component bound: p must lie in [1, n-2], got " + std::to_string(p));
  return timed([&] {
    const std::size_t bound = static_cast<std::size_t>(p * n - p * (p + 1) / 2);
    const std::uint32_t allowed = static_cast<std::uint32_t>(p - 1);
    auto r = make_record("component-bound-p" + std::to_string(p),
                         "every F with |F| <= " + std::to_string(bound) + " leaves at most " +
                             std::to_string(allowed) + " vertices outside the largest component");
    const auto name = permutation_names(g);
    const Graph& graph = g.graph();
    const auto universe = static_cast<std::uint32_t>(g.order());
    const std::uint64_t total = subsets_up_to(universe, bound);
    r.details = {{"p", p}, {"max_fault_size", bound}};
    if (total <= kExhaustiveLimit) {
      r.scope = "exhaustive over all " + count_text(total) + " subsets with |F| <= " + std::to_string(bound);
      const auto census = fault_census(graph, bound, opts.workers, [&](std::size_t, const detail::CutProfile& pr) {
        return pr.residual() > allowed;
      });
      r.details["disconnecting_by_size"] = census.disconnecting;
      r.details["worst_residual_by_size"] = census.worst_residual;
      r.details["violations"] = census.violations;
      if (census.violations > 0) {
        r.counterexample = {{"fault_set", named(name, census.first_violation)},
                            {"profile", profile_json(census.violation_profile)}};
      }
      conclude(r, census.violations == 0, true);
      return r;
    }

    // Sampled: neighborhood templates N(v) + extras first, then random trials.
    struct Tally {
      std::uint64_t scanned = 0;
      std::uint64_t disconnecting = 0;
      std::uint32_t worst = 0;
      std::uint64_t violations = 0;
      std::vector<Vertex> first;
      detail::CutProfile first_profile;
      void record(std::span<const Vertex> f, const detail::CutProfile& pr, std::uint32_t allowed_residual) {
        ++scanned;
        if (pr.disconnected()) ++disconnecting;
        worst = std::max(worst, pr.residual());
        if (pr.residual() > allowed_residual) {
          if (violations++ == 0) {
            first.assign(f.begin(), f.end());
            first_profile = pr;
          }
        }
      }
      void merge(const Tally& o) {
        scanned += o.scanned;
        disconnecting += o.disconnecting;
        worst = std::max(worst, o.worst);
        if (violations == 0 && o.violations > 0) {
          first = o.first;
          first_profile = o.first_profile;
        }
        violations += o.violations;
      }
    };
    const std::size_t degree = graph.max_degree();
    const bool templates_apply = bound >= degree && graph.is_regular();
    const std::size_t extras = templates_apply ? bound - degree : 0;
    const std::uint64_t template_count =
        templates_apply ? universe * detail::binomial(universe - degree - 1, extras) : 0;
    const bool run_templates = templates_apply && template_count <= kTemplateLimit;
    const std::uint64_t stream = detail::mix_seed(opts.seed, kComponentStream + static_cast<std::uint64_t>(p));
    Tally tally;
    detail::with_analyzer(graph, [&](auto make) {
      if (run_templates) {
        auto parts = detail::run_parts(
            universe, opts.workers, [&] { return std::pair{make(), std::vector<Vertex>{}}; },
            [&](auto& st, std::size_t part) {
              Tally t;
              const auto v = static_cast<Vertex>(part);
              auto nb = graph.neighbors(v);
              std::vector<Vertex> others;
              for (Vertex x = 0; x < universe; ++x) {
                if (x != v && !graph.adjacent(v, x)) others.push_back(x);
              }
              std::vector<Vertex> f;
              auto visit = [&](std::span<const Vertex> idx) {
                f.assign(nb.begin(), nb.end());
                for (Vertex i : idx) f.push_back(others[i]);
                std::sort(f.begin(), f.end());
                t.record(f, st.first.analyze(f), allowed);
                return true;
              };
              if (extras == 0) {
                visit({});
              } else {
                const auto m = static_cast<std::uint32_t>(others.size());
                for (Vertex first = 0; first < m; ++first) {
                  detail::for_each_subset_from(m, extras, first, st.second, visit);
                }
              }
              return t;
            });
        for (const auto& t : parts) tally.merge(t);
      }
      const std::uint64_t chunks = (opts.trials + kChunk - 1) / kChunk;
      auto parts = detail::run_parts(chunks, opts.workers, [&] { return make(); },
                                     [&](auto& analyzer, std::size_t chunk) {
                                       Tally t;
                                       std::mt19937_64 rng(detail::mix_seed(stream, chunk));
                                       std::uniform_int_distribution<Vertex> pick(0, universe - 1);
                                       const std::uint64_t lo = chunk * kChunk;
                                       const std::uint64_t hi = std::min(opts.trials, lo + kChunk);
                                       std::vector<Vertex> f;
                                       for (std::uint64_t i = lo; i < hi; ++i) {
                                         f.clear();
                                         switch (i % 3) {
                                           case 0: {  // neighborhood of a small local region
                                             const std::size_t size =
                                                 std::uniform_int_distribution<std::size_t>(1, p + 1)(rng);
                                             const auto region = sample_local_set(graph, size, rng);
                                             std::vector<Vertex> nb;
                                             analyzer.neighborhood(region, nb);
                                             std::shuffle(nb.begin(), nb.end(), rng);
                                             nb.resize(std::min(nb.size(), bound));
                                             f = nb;
                                             break;
                                           }
                                           case 1: {  // N(v) plus random extras
                                             const Vertex v = pick(rng);
                                             auto nb = graph.neighbors(v);
                                             f.assign(nb.begin(), nb.end());
                                             std::shuffle(f.begin(), f.end(), rng);
                                             f.resize(std::min(f.size(), bound));
                                             while (f.size() < bound) {
                                               const Vertex x = pick(rng);
                                               if (x != v && std::find(f.begin(), f.end(), x) == f.end()) {
                                                 f.push_back(x);
                                               }
                                             }
                                             break;
                                           }
                                           default: {  // uniform subset
                                             const std::size_t size =
                                                 std::uniform_int_distribution<std::size_t>(1, bound)(rng);
                                             while (f.size() < size) {
                                               const Vertex x = pick(rng);
                                               if (std::find(f.begin(), f.end(), x) == f.end()) f.push_back(x);
                                             }
                                           }
                                         }
                                         f = sorted_unique(std::move(f));
                                         t.record(f, analyzer.analyze(f), allowed);
                                       }
                                       return t;
                                     });
      for (const auto& t : parts) tally.merge(t);
      return 0;
    });
    r.scope = "sampled " + count_text(opts.trials) + " trials with seed " + std::to_string(opts.seed) + " plus " +
              count_text(run_templates ? template_count : 0) + " neighborhood templates";
    r.details["trials"] = opts.trials;
    r.details["seed"] = opts.seed;
    r.details["templates"] = run_templates ? template_count : 0;
    r.details["disconnecting_hits"] = tally.disconnecting;
    r.details["worst_residual"] = tally.worst;
    r.details["violations"] = tally.violations;
    if (tally.violations > 0) {
      r.counterexample = {{"fault_set", named(name, tally.first)}, {"profile", profile_json(tally.first_profile)}};
    }
    conclude(r, tally.violations == 0, false);
    return r;
  });
}

CheckRecord check_4cycle_labels(const CayleyGraph& g) {
  return timed([&] {
    auto r = make_record("four-cycle-labels",
                         "every 4-cycle alternates two generators (ij), (kl) with disjoint supports");
    const auto cycles = enumerate_4cycles(g.graph());
    r.scope = "exhaustive over the full census of " + count_text(cycles.size()) + " 4-cycles";
    const auto name = permutation_names(g);
    std::map<std::string, std::uint64_t> pairs;
    for (const auto& c : cycles) {
      std::array<std::optional<Transposition>, 4> labels;
      for (int i = 0; i < 4; ++i) labels[i] = g.edge_label(c[i], c[(i + 1) % 4]);
      const bool valid = std::all_of(labels.begin(), labels.end(), [](const auto& l) { return l.has_value(); });
      const bool ok = valid && *labels[0] == *labels[2] && *labels[1] == *labels[3] &&
                      labels[0]->disjoint_from(*labels[1]);
      if (ok) {
        auto a = *labels[0];
        auto b = *labels[1];
        if (b < a) std::swap(a, b);
        ++pairs[a.to_string() + b.to_string()];
      } else if (r.counterexample.is_null()) {
        json ls = json::array();
        for (const auto& l : labels) ls.push_back(l ? json(l->to_string()) : json(nullptr));
        r.counterexample = {{"cycle", named(name, c)}, {"labels", ls}};
      }
    }
    json by_pair = json::object();
    for (const auto& [k, v] : pairs) by_pair[k] = v;
    r.details = {{"four_cycles", cycles.size()}, {"by_generator_pair", by_pair}};
    if (!cycles.empty()) r.witness = {{"cycle", named(name, cycles.front())}};
    conclude(r, r.counterexample.is_null(), true);
    return r;
  });
}

CheckRecord check_last_block_attachment(const CayleyGraph& g) {
  return timed([&] {
    const int n = g.n();
    auto r = make_record("last-block-attachment",
                         "every edge inside blocks 1.." + std::to_string(n - 1) +
                             " has an endpoint with exactly one neighbor in block " + std::to_string(n));
    const auto name = permutation_names(g);
    const Graph& graph = g.graph();
    auto last_block_degree = [&](Vertex v) {
      std::size_t d = 0;
      for (Vertex w : graph.neighbors(v)) d += g.block_of(w) == n;
      return d;
    };
    json per_block = json::object();
    std::uint64_t scanned = 0;
    for (int b = 1; b < n; ++b) {
      std::uint64_t internal = 0;
      for (auto [u, v] : graph.edge_list()) {
        if (g.block_of(u) != b || g.block_of(v) != b) continue;
        ++internal;
        const std::size_t du = last_block_degree(u);
        const std::size_t dv = last_block_degree(v);
        if (du != 1 && dv != 1 && r.counterexample.is_null()) {
          r.counterexample = {{"u", name(u)}, {"v", name(v)}, {"block", b}, {"u_degree", du}, {"v_degree", dv}};
        }
      }
      per_block[std::to_string(b)] = internal;
      scanned += internal;
    }
    r.scope = "exhaustive over all " + count_text(scanned) + " edges inside blocks 1.." + std::to_string(n - 1);
    r.details = {{"internal_edges_by_block", per_block}};
    conclude(r, r.counterexample.is_null(), true);
    return r;
  });
}

CheckRecord check_good_neighbor_exact(const CayleyGraph& g, const LabOptions& opts) {
  return timed([&] {
    const std::size_t target = static_cast<std::size_t>(4 * g.n() - 8);
    auto r = make_record("good-neighbor-exact", "the minimum 2-good-neighbor cut has exactly " +
                                                    std::to_string(target) + " vertices");
    const auto name = permutation_names(g);
    const auto w = min_good_neighbor_cut_exhaustive(g.graph(), 2, target, SearchOptions{opts.workers});
    r.scope = "exhaustive over all " + count_text(subsets_up_to(g.order(), target - 1)) +
              " subsets below the target size, then size " + std::to_string(target) + " until the first witness";
    r.details = {{"kappa2", w ? json(w->fault_set.size()) : json(nullptr)}, {"target", target}};
    const bool ok = w && w->fault_set.size() == target;
    if (w) {
      const json entry = {{"fault_set", named(name, w->fault_set)}, {"component_sizes", component_sizes(w->analysis)}};
      if (ok) {
        r.witness = entry;
      } else {
        r.counterexample = entry;
      }
    } else {
      r.counterexample = {{"reason", "no 2-good-neighbor cut of size <= " + std::to_string(target)}};
    }
    conclude(r, ok, true);
    return r;
  });
}

CheckRecord check_cyclic_connectivity(const CayleyGraph& g, CyclicMode mode, const LabOptions& opts) {
  return timed([&] {
    const std::size_t target = static_cast<std::size_t>(4 * g.n() - 8);
    const auto name = permutation_names(g);
    const Graph& graph = g.graph();
    CheckRecord r;
    switch (mode) {
      case CyclicMode::Exact: {
        r = make_record("cyclic-exact", "the minimum cyclic vertex cut has exactly " + std::to_string(target) +
                                            " vertices");
        r.scope = "exhaustive over all " + count_text(subsets_up_to(g.order(), target - 1)) +
                  " subsets below the target size, then size " + std::to_string(target) + " until the first witness";
        const auto w = min_cyclic_cut_exhaustive(graph, target, SearchOptions{opts.workers});
        bool construction_ok = false;
        if (auto c = first_4cycle(graph)) {
          const auto f = build_cycle_neighborhood_cut(graph, *c);
          construction_ok = f.size() == target && is_cyclic_cut(graph, f);
        }
        r.details = {{"kappa_c", w ? json(w->fault_set.size()) : json(nullptr)},
                     {"target", target},
                     {"cycle_neighborhood_cut_valid", construction_ok}};
        const bool ok = w && w->fault_set.size() == target && construction_ok;
        if (w) {
          const json entry = {{"fault_set", named(name, w->fault_set)},
                              {"component_sizes", component_sizes(w->analysis)}};
          if (ok) {
            r.witness = entry;
          } else {
            r.counterexample = entry;
          }
        } else {
          r.counterexample = {{"reason", "no cyclic cut of size <= " + std::to_string(target)}};
        }
        conclude(r, ok, true);
        return r;
      }
      case CyclicMode::Upper: {
        r = make_record("cyclic-upper", "the neighborhood of a 4-cycle is a cyclic vertex cut of size " +
                                            std::to_string(target));
        r.scope = "constructed witness from the lexicographically first 4-cycle";
        const auto c = first_4cycle(graph);
        if (!c) {
          r.counterexample = {{"reason", "graph has no 4-cycle"}};
          conclude(r, false, true);
          return r;
        }
        const auto f = build_cycle_neighborhood_cut(graph, *c);
        const auto a = components(graph, f);
        const bool cyclic = is_cyclic_cut(graph, f);
        r.details = {{"size", f.size()},
                     {"target", target},
                     {"cyclic", cyclic},
                     {"cyclic_components", a.cyclic_component_count()},
                     {"component_sizes", component_sizes(a)}};
        const json entry = {{"cycle", named(name, *c)}, {"fault_set", named(name, f)}};
        const bool ok = cyclic && f.size() == target;
        if (ok) {
          r.witness = entry;
        } else {
          r.counterexample = entry;
        }
        conclude(r, ok, true);
        return r;
      }
      case CyclicMode::Falsify: {
        const std::size_t below = target - 1;
        r = make_record("cyclic-falsify", "no cyclic vertex cut has " + std::to_string(below) + " or fewer vertices");
        r.scope = "sampled " + count_text(opts.trials) + " falsifier trials with seed " + std::to_string(opts.seed);
        const auto w = randomized_cut_falsifier(graph, below, opts.trials, detail::mix_seed(opts.seed, kFalsifyStream),
                                                SearchOptions{opts.workers});
        r.details = {{"target", below}, {"trials", opts.trials}, {"seed", opts.seed}};
        if (w) {
          r.counterexample = {{"fault_set", named(name, w->fault_set)},
                              {"component_sizes", component_sizes(w->analysis)}};
        }
        conclude(r, !w, false);
        return r;
      }
    }
    return r;
  });
}

VerificationReport verify_all(const CayleyGraph& g, const std::string& spec, const LabOptions& opts,
                              const std::vector<std::string>& only, const std::string& resolved_spec) {
  const auto& ids = check_ids();
  for (const auto& id : only) {
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw ArgumentError("unknown check id '" + id + "'");
  }
  const auto wanted = [&](const std::string& id) {
    return only.empty() || std::find(only.begin(), only.end(), id) != only.end();
  };

  VerificationReport report;
  report.spec = spec;
  report.resolved_spec = resolved_spec.empty() ? spec : resolved_spec;
  report.n = g.n();
  report.generators = g.generators().edge_string();
  report.generator_class = class_name(g);
  report.order = g.order();
  report.degree = g.generators().edges().size();
  report.seed = opts.seed;

  const int n = g.n();
  const auto& gen = g.generators();
  const bool unicyclic = gen.is_unicyclic() && n >= 4;
  const bool mb = gen.cls() == GenClass::Cycle && n >= 4;
  const std::string not_unicyclic = "requires a unicyclic triangle-free generating graph with n >= 4";
  const std::string not_mb = "requires the n-cycle generating graph with n >= 4";
  const std::string not_mb4 = "requires the 4-cycle generating graph (n = 4)";
  const auto name = permutation_names(g);
  const auto start = Clock::now();

  auto run = [&](const std::string& id) -> CheckRecord {
    std::string reason;
    bool gating = true;
    if (id == "connectivity") {
      if (n > 6) reason = "max-flow scan limited to n <= 6";
    } else if (id == "out-neighbor-disjoint" || id == "out-neighbor-escape" || id == "neighbor-lower-bound") {
      if (!mb) reason = not_mb;
    } else if (id == "isolated-vertex" || id == "large-component" || id == "last-block-attachment" ||
               id == "good-neighbor-exact" || id == "cyclic-exact") {
      if (!(mb && n == 4)) reason = not_mb4;
    } else if (id == "cyclic-falsify") {
      if (!(unicyclic && n == 5)) reason = "falsification runs at n = 5 on unicyclic triangle-free generators";
    } else {
      if (!unicyclic) reason = not_unicyclic;
      if ((id == "edge-cn-exclusion" || id == "cn-triple-exclusion") && !mb) gating = false;
    }
    if (!reason.empty()) return skipped(id, reason);
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (elapsed > opts.budget_seconds) {
      std::ostringstream os;
      os << "wall-clock budget of " << opts.budget_seconds << " s exhausted";
      return skipped(id, os.str());
    }

    CheckRecord r;
    if (id == "cn-bound") r = check_cn_bound(g.graph(), name);
    if (id == "connectivity") r = check_connectivity_values(g);
    if (id == "cross-edges") r = check_cross_edges(g);
    if (id == "out-neighbor-disjoint") r = check_out_neighbor_disjointness(g);
    if (id == "out-neighbor-escape") r = check_out_neighbor_escape(g);
    if (id == "edge-cn-exclusion") r = check_edge_cn_exclusion(g.graph(), name);
    if (id == "cn-triple-exclusion") r = check_cn_triple_exclusion(g.graph(), name);
    if (id == "isolated-vertex") r = check_isolated_vertex(g.graph(), opts, name);
    if (id == "large-component") r = check_large_component_bounds(g.graph(), opts, name);
    if (id == "neighbor-lower-bound") r = check_neighbor_lower_bound(g, opts);
    if (id == "component-bound-p1") r = check_component_bound_p(g, 1, opts);
    if (id == "component-bound-p2") r = check_component_bound_p(g, 2, opts);
    if (id == "four-cycle-labels") r = check_4cycle_labels(g);
    if (id == "last-block-attachment") r = check_last_block_attachment(g);
    if (id == "good-neighbor-exact") r = check_good_neighbor_exact(g, opts);
    if (id == "cyclic-exact") r = check_cyclic_connectivity(g, CyclicMode::Exact, opts);
    if (id == "cyclic-upper") r = check_cyclic_connectivity(g, CyclicMode::Upper, opts);
    if (id == "cyclic-falsify") r = check_cyclic_connectivity(g, CyclicMode::Falsify, opts);
    r.gating = gating;
    if (!gating) r.scope += " (exploratory, non-gating)";
    return r;
  };

  for (const auto& id : ids) {
    if (wanted(id)) report.checks.push_back(run(id));
  }
  return report;
}

nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing) {
  json checks = json::array();
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped_count = 0;
  std::size_t exploratory = 0;
  for (const auto& c : r.checks) {
    json j = {{"id", c.id},
              {"claim", c.claim},
              {"scope", c.scope},
              {"verdict", std::string(to_string(c.verdict))},
              {"gating", c.gating},
              {"details", c.details},
              {"witness", c.witness},
              {"counterexample", c.counterexample}};
    if (include_timing) j["millis"] = c.millis;
    checks.push_back(std::move(j));
    if (c.verdict == Verdict::Skipped) {
      ++skipped_count;
    } else if (c.failed()) {
      (c.gating ? failed : exploratory) += 1;
    } else {
      ++passed;
    }
  }
  json out = {{"schema", kReportSchema},
              {"tool", {{"name", std::string(kToolName)}, {"version", std::string(kVersion)}}},
              {"suite", kSuiteVersion},
              {"spec", r.spec},
              {"resolved_spec", r.resolved_spec},
              {"graph",
               {{"n", r.n}, {"generators", r.generators}, {"class", r.generator_class}, {"order", r.order},
                {"degree", r.degree}}},
              {"seed", r.seed},
              {"checks", checks},
              {"summary",
               {{"passed", passed},
                {"failed", failed},
                {"exploratory_failures", exploratory},
                {"skipped", skipped_count},
                {"status", r.any_gating_failure() ? "fail" : "pass"}}}};
  return out;
}

VerificationReport report_from_json(const nlohmann::ordered_json& j) {
  try {
    if (j.at("schema").get<int>() != kReportSchema) throw ValidationError("unsupported report schema");
    VerificationReport r;
    r.spec = j.at("spec").get<std::string>();
    r.resolved_spec = j.value("resolved_spec", r.spec);
    const auto& g = j.at("graph");
    r.n = g.at("n").get<int>();
    r.generators = g.at("generators").get<std::string>();
    r.generator_class = g.at("class").get<std::string>();
    r.order = g.at("order").get<std::uint64_t>();
    r.degree = g.at("degree").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& c : j.at("checks")) {
      CheckRecord rec;
      rec.id = c.at("id").get<std::string>();
      rec.claim = c.at("claim").get<std::string>();
      rec.scope = c.at("scope").get<std::string>();
      const auto verdict = c.at("verdict").get<std::string>();
      bool known = false;
      for (auto v : {Verdict::ProvedExhaustive, Verdict::SupportedSampled, Verdict::Fail, Verdict::Skipped}) {
        if (to_string(v) == verdict) {
          rec.verdict = v;
          known = true;
        }
      }
      if (!known) throw ValidationError("unknown verdict '" + verdict + "'");
      rec.gating = c.at("gating").get<bool>();
      rec.details = c.at("details");
      rec.witness = c.at("witness");
      rec.counterexample = c.at("counterexample");
      rec.millis = c.value("millis", std::int64_t{0});
      r.checks.push_back(std::move(rec));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << kToolName << ' ' << kVersion << " verification report\n";
  os << "spec: " << r.spec << " (" << r.resolved_spec << ")\n";
  os << "graph: n=" << r.n << " order=" << r.order << " degree=" << r.degree << " class=" << r.generator_class
     << " generators=" << r.generators << "\n";
  os << "seed: " << r.seed << "\n\n";
  os << std::left << std::setw(24) << "CHECK" << std::setw(20) << "VERDICT" << std::setw(8) << "GATING"
     << std::setw(9) << "MILLIS" << "SCOPE\n";
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped_count = 0;
  std::size_t exploratory = 0;
  for (const auto& c : r.checks) {
    const char* gating = c.verdict == Verdict::Skipped ? "-" : (c.gating ? "yes" : "no");
    os << std::left << std::setw(24) << c.id << std::setw(20) << to_string(c.verdict) << std::setw(8) << gating
       << std::setw(9) << c.millis << c.scope << "\n";
    if (c.failed()) os << "    counterexample: " << c.counterexample.dump() << "\n";
    if (c.verdict == Verdict::Skipped) {
      ++skipped_count;
    } else if (c.failed()) {
      (c.gating ? failed : exploratory) += 1;
    } else {
      ++passed;
    }
  }
  os << "\nsummary: " << passed << " passed, " << failed << " failed, " << exploratory
     << " exploratory failures, " << skipped_count << " skipped -> " << (r.any_gating_failure() ? "FAIL" : "PASS")
     << "\n";
  return os.str();
}

}  // namespace cayconn::lab
