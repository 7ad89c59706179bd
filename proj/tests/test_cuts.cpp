#include <doctest.h>

#include <cstdlib>
#include <random>

#include "cayconn/components.hpp"
#include "cayconn/cuts.hpp"
#include "cayconn/detail/masks.hpp"
#include "cayconn/detail/parallel.hpp"
#include "cayconn/errors.hpp"
#include "cayconn/maxflow.hpp"
#include "fixtures.hpp"

using namespace cayconn;
using namespace testing_fixtures;

namespace {

FaultSet neighborhood(const Graph& g, Vertex v) {
  auto nb = g.neighbors(v);
  return FaultSet({nb.begin(), nb.end()});
}

FaultSet first_cycle_cut(const Graph& g) { return build_cycle_neighborhood_cut(g, first_4cycle(g).value()); }

// Independent component count: repeated DFS over an explicit adjacency.
std::vector<std::size_t> dfs_component_sizes(const Graph& g, const FaultSet& f) {
  std::vector<int> state(g.order(), 0);
  for (Vertex v : f.members()) state[v] = 2;
  std::vector<std::size_t> sizes;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (state[s]) continue;
    std::size_t size = 0;
    std::vector<Vertex> stack{s};
    state[s] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : g.neighbors(v)) {
        if (!state[w]) {
          state[w] = 1;
          stack.push_back(w);
        }
      }
    }
    sizes.push_back(size);
  }
  return sizes;
}

}  // namespace

TEST_CASE("fault sets are sorted and unique") {
  const FaultSet f({5, 1, 3, 1});
  CHECK(f.members() == std::vector<Vertex>{1, 3, 5});
  CHECK(f.contains(3));
  CHECK_FALSE(f.contains(2));
  CHECK(FaultSet({9}) < FaultSet({1, 2}));
  CHECK(FaultSet({1, 2}) < FaultSet({1, 3}));
}

TEST_CASE("component analysis") {
  const auto g = mb(4);
  const auto whole = components(g.graph(), FaultSet{});
  CHECK(whole.component_count() == 1);
  CHECK(whole.components[0].vertex_count == 24);
  CHECK(whole.components[0].contains_cycle);

  const auto iso = components(g.graph(), neighborhood(g.graph(), 0));
  CHECK(iso.component_count() == 2);
  CHECK(iso.components[0].members == std::vector<Vertex>{0});
  CHECK(iso.components[0].edge_count == 0);
  CHECK_FALSE(iso.components[0].contains_cycle);
  CHECK(iso.largest() == 19);
  CHECK(iso.residual() == 1);
  CHECK(iso.component_of[0] == 0);
  CHECK(iso.component_of[g.graph().neighbors(0)[0]] == -1);

  const auto cyc = components(g.graph(), first_cycle_cut(g.graph()));
  CHECK(cyc.component_count() >= 2);
  CHECK(cyc.cyclic_component_count() >= 2);
  std::size_t total = 0;
  for (const auto& c : cyc.components) {
    total += c.vertex_count;
    CHECK(c.contains_cycle == (c.edge_count >= c.vertex_count));
  }
  CHECK(total == 24 - 8);
  CHECK_THROWS_AS(components(g.graph(), FaultSet({99})), ArgumentError);
}

TEST_CASE("cut predicates") {
  const auto g = mb(4);
  const auto& graph = g.graph();
  const auto nv = neighborhood(graph, 0);
  const auto nc = first_cycle_cut(graph);
  CHECK(is_vertex_cut(graph, nv));
  CHECK_FALSE(is_cyclic_cut(graph, nv));
  CHECK_FALSE(is_good_neighbor_cut(graph, nv, 1));
  CHECK(is_good_neighbor_cut(graph, nv, 0) == is_vertex_cut(graph, nv));
  CHECK(is_cyclic_cut(graph, nc));
  CHECK(is_good_neighbor_cut(graph, nc, 2));
  CHECK_FALSE(is_vertex_cut(graph, FaultSet{}));
  CHECK_FALSE(is_cyclic_cut(graph, FaultSet{}));
  CHECK_THROWS_AS(is_good_neighbor_cut(graph, nv, -1), ArgumentError);
  CHECK(CutCriterion::cyclic().to_string() == "cyclic-cut");
  CHECK(CutCriterion::good_neighbor(2).to_string() == "good-neighbor-cut(2)");
  CHECK(CutCriterion::vertex().to_string() == "vertex-cut");
}

TEST_CASE("disconnecting census on MB4 matches the oracle") {
  // Oracle: counts of disconnecting sets by size and worst residual.
  const std::uint64_t expected_count[] = {0, 0, 0, 0, 24, 456};
  const std::uint64_t expected_worst[] = {0, 0, 0, 0, 1, 1};
  const auto g = mb(4);
  std::vector<Vertex> buf;
  for (std::size_t k = 1; k <= 5; ++k) {
    std::uint64_t count = 0;
    std::uint64_t worst = 0;
    for (Vertex first = 0; first < 24; ++first) {
      detail::for_each_subset_from(24, k, first, buf, [&](std::span<const Vertex> s) {
        const FaultSet f({s.begin(), s.end()});
        const auto sizes = dfs_component_sizes(g.graph(), f);
        if (sizes.size() >= 2) {
          ++count;
          const auto a = components(g.graph(), f);
          worst = std::max<std::uint64_t>(worst, a.residual());
          REQUIRE(is_vertex_cut(g.graph(), f));
        }
        return true;
      });
    }
    CHECK(count == expected_count[k]);
    CHECK(worst == expected_worst[k]);
  }
}

TEST_CASE("subset enumeration covers each subset once in order") {
  std::vector<Vertex> buf;
  std::uint64_t count = 0;
  std::vector<Vertex> prev;
  for (Vertex first = 0; first < 10; ++first) {
    detail::for_each_subset_from(10, 3, first, buf, [&](std::span<const Vertex> s) {
      std::vector<Vertex> cur(s.begin(), s.end());
      CHECK(std::is_sorted(cur.begin(), cur.end()));
      if (!prev.empty()) CHECK(prev < cur);
      prev = cur;
      ++count;
      return true;
    });
  }
  CHECK(count == detail::binomial(10, 3));
}

TEST_CASE("exact minimum cuts on MB4") {
  const auto g = mb(4);
  const auto& graph = g.graph();
  CHECK_FALSE(min_cyclic_cut_exhaustive(graph, 7).has_value());
  const auto w = min_cyclic_cut_exhaustive(graph, 8);
  REQUIRE(w.has_value());
  CHECK(w->fault_set.size() == 8);
  CHECK(is_cyclic_cut(graph, w->fault_set));
  CHECK(is_vertex_cut(graph, w->fault_set));

  CHECK_FALSE(min_good_neighbor_cut_exhaustive(graph, 2, 7).has_value());
  const auto g2 = min_good_neighbor_cut_exhaustive(graph, 2, 8);
  REQUIRE(g2.has_value());
  CHECK(g2->fault_set.size() == 8);
  CHECK(is_good_neighbor_cut(graph, g2->fault_set, 2));
  CHECK(is_cyclic_cut(graph, g2->fault_set));

  const auto g0 = min_good_neighbor_cut_exhaustive(graph, 0, 4);
  REQUIRE(g0.has_value());
  CHECK(g0->fault_set.size() == 4);
}

TEST_CASE("exhaustive vertex cuts agree with max-flow") {
  for (const auto& g : {mb(4), bubble(4), star(4), bubble(3), mb(3)}) {
    const auto kappa = vertex_connectivity(g.graph()).value;
    const auto w = min_cut_exhaustive(g.graph(), CutCriterion::vertex(), kappa);
    REQUIRE(w.has_value());
    CHECK(w->fault_set.size() == kappa);
    CHECK_FALSE(min_cut_exhaustive(g.graph(), CutCriterion::vertex(), kappa - 1).has_value());
  }
}

TEST_CASE("exhaustive search is independent of worker count") {
  const auto g = mb(4);
  const auto a = min_cyclic_cut_exhaustive(g.graph(), 8, SearchOptions{1});
  const auto b = min_cyclic_cut_exhaustive(g.graph(), 8, SearchOptions{8});
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->fault_set == b->fault_set);
}

TEST_CASE("a lone 4-cycle has no cyclic cut") {
  const auto c4 = fixtures::cycle(4);
  for (std::size_t k = 0; k <= 4; ++k) CHECK_FALSE(min_cyclic_cut_exhaustive(c4, k).has_value());
}

TEST_CASE("cycle neighborhood cuts have size 4n-8 and are cyclic") {
  struct Case {
    CayleyGraph g;
    std::size_t size;
  };
  const Case cases[] = {{mb(4), 8}, {ug(5), 12}, {mb(5), 12}, {ug(6), 16}, {mb(6), 16}, {ug(7), 20}};
  for (const auto& c : cases) {
    const auto f = first_cycle_cut(c.g.graph());
    CHECK(f.size() == c.size);
    CHECK(is_cyclic_cut(c.g.graph(), f));
  }
  const auto g = mb(4);
  const auto sizes = dfs_component_sizes(g.graph(), first_cycle_cut(g.graph()));
  CHECK(sizes == std::vector<std::size_t>{4, 4, 4, 4});
}

TEST_CASE("cycle neighborhood cut rejects non-cycles") {
  const auto g = mb(4);
  const auto& graph = g.graph();
  CHECK_THROWS_AS(build_cycle_neighborhood_cut(graph, {0, 1, 2, 3}), ArgumentError);
  auto c = first_4cycle(graph).value();
  std::swap(c[1], c[2]);
  CHECK_THROWS_AS(build_cycle_neighborhood_cut(graph, c), ArgumentError);
  CHECK_THROWS_AS(build_cycle_neighborhood_cut(graph, {0, 0, 0, 0}), ArgumentError);
}

TEST_CASE("large component profile") {
  const auto g = mb(4);
  const auto& graph = g.graph();
  CHECK(large_component_profile(graph, FaultSet{}) == ComponentProfile{24, 0});
  CHECK(large_component_profile(graph, neighborhood(graph, 5)) == ComponentProfile{19, 1});
  // Four components of four vertices each.
  CHECK(large_component_profile(graph, first_cycle_cut(graph)) == ComponentProfile{4, 12});
}

TEST_CASE("randomized falsifier") {
  const auto m4 = mb(4);
  CHECK_FALSE(randomized_cut_falsifier(m4.graph(), 7, 100'000, 3).has_value());

  const auto u5 = ug(5);
  const auto w = randomized_cut_falsifier(u5.graph(), 12, 2000, 1);
  REQUIRE(w.has_value());
  CHECK(w->fault_set.size() <= 12);
  CHECK(is_cyclic_cut(u5.graph(), w->fault_set));

  const auto a = randomized_cut_falsifier(u5.graph(), 12, 5000, 42, SearchOptions{1});
  const auto b = randomized_cut_falsifier(u5.graph(), 12, 5000, 42, SearchOptions{8});
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->fault_set == b->fault_set);
  CHECK_THROWS_AS(randomized_cut_falsifier(u5.graph(), 12, 0, 1), ArgumentError);
}

TEST_CASE("bitmask and generic analyzers agree") {
  for (const auto& g : {mb(4), mb(5), ug(5)}) {
    const auto& graph = g.graph();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(graph.order() - 1));
    detail::GenericAnalyzer generic(graph);
    auto check_with = [&](auto& fast) {
      for (int trial = 0; trial < 3000; ++trial) {
        const std::size_t size = 1 + trial % 14;
        std::vector<Vertex> f;
        // Half the trials start from a neighborhood so that cuts actually occur.
        if (trial % 2 == 0) {
          auto nb = graph.neighbors(pick(rng));
          f.assign(nb.begin(), nb.end());
        }
        while (f.size() < size) f.push_back(pick(rng));
        const FaultSet fs(f);
        const auto p = fast.analyze(fs.members());
        const auto q = generic.analyze(fs.members());
        const auto a = components(graph, fs);
        REQUIRE(p.components == q.components);
        REQUIRE(p.components == a.component_count());
        REQUIRE(p.cyclic_components == q.cyclic_components);
        REQUIRE(p.cyclic_components == a.cyclic_component_count());
        REQUIRE(p.largest == q.largest);
        REQUIRE(p.largest == a.largest());
        REQUIRE(p.min_degree == q.min_degree);
        REQUIRE(p.min_degree == a.min_survivor_degree());
        REQUIRE(fast.neighborhood_size(fs.members()) == generic.neighborhood_size(fs.members()));
      }
    };
    if (graph.order() <= 64) {
      detail::MaskAnalyzer<1> fast(graph);
      check_with(fast);
    } else {
      detail::MaskAnalyzer<2> fast(graph);
      check_with(fast);
    }
  }
}

TEST_CASE("vertex connectivity by max-flow") {
  CHECK(vertex_connectivity(fixtures::cycle(4)).value == 2);
  CHECK(vertex_connectivity(fixtures::hypercube(3)).value == 3);
  CHECK(vertex_connectivity(fixtures::complete_bipartite(2, 3), PairScan::AllPairs).value == 2);
  const auto k4 = vertex_connectivity(fixtures::complete(4));
  CHECK(k4.complete);
  CHECK(k4.value == 3);
  for (const auto& g : {mb(4), bubble(4), mb(5)}) {
    const auto single = vertex_connectivity(g.graph(), PairScan::SingleSource);
    const auto all = vertex_connectivity(g.graph(), PairScan::AllPairs);
    CHECK(single.value == all.value);
    CHECK(single.min_cut.size() == single.value);
    CHECK(is_vertex_cut(g.graph(), single.min_cut));
  }
  FaultSet cut;
  const auto g = mb(4);
  CHECK(local_connectivity(g.graph(), 0, v_of(g, "4321"), static_cast<std::size_t>(-1), &cut) == 4);
  CHECK(cut.size() == 4);
  CHECK(local_connectivity(g.graph(), 0, v_of(g, "4321"), 2) == 2);
  CHECK_THROWS_AS(local_connectivity(g.graph(), 0, 0), ArgumentError);
  CHECK_THROWS_AS(local_connectivity(g.graph(), 0, g.graph().neighbors(0)[0]), ArgumentError);
  const std::vector<std::pair<Vertex, Vertex>> split{{0, 1}, {2, 3}};
  CHECK_THROWS_AS(vertex_connectivity(Graph::from_edges(4, split)), ArgumentError);
}

TEST_CASE("worker count from the environment") {
  ::setenv("CAYCONN_WORKERS", "3", 1);
  CHECK(default_workers() == 3);
  ::setenv("CAYCONN_WORKERS", "zero", 1);
  CHECK(default_workers() >= 1);
  ::unsetenv("CAYCONN_WORKERS");
  CHECK(default_workers() >= 1);
}
