#include <doctest.h>

#include <algorithm>

#include "cayconn/errors.hpp"
#include "cayconn/lab.hpp"
#include "cayconn/topology.hpp"
#include "fixtures.hpp"

using namespace cayconn;
using namespace cayconn::lab;
using namespace testing_fixtures;

namespace {

LabOptions quick(std::uint64_t trials = 20'000, unsigned workers = 2) {
  LabOptions o;
  o.trials = trials;
  o.workers = workers;
  o.seed = 5;
  return o;
}

bool passed(const CheckRecord& r) {
  return r.verdict == Verdict::ProvedExhaustive || r.verdict == Verdict::SupportedSampled;
}

const auto kMb4 = mb(4);
const auto kMb5 = mb(5);
const auto kUg5 = ug(5);
const auto kB4 = bubble(4);

}  // namespace

TEST_CASE("verdict strings") {
  CHECK(to_string(Verdict::ProvedExhaustive) == "PROVED-EXHAUSTIVE");
  CHECK(to_string(Verdict::SupportedSampled) == "SUPPORTED-SAMPLED");
  CHECK(to_string(Verdict::Fail) == "FAIL");
  CHECK(to_string(Verdict::Skipped) == "SKIPPED");
}

TEST_CASE("common neighbor bound") {
  for (const auto* g : {&kMb4, &kMb5, &kUg5}) {
    const auto r = check_cn_bound(g->graph(), permutation_names(*g));
    CHECK(r.verdict == Verdict::ProvedExhaustive);
    CHECK(r.details["max_cn"] == 2);
  }
  CHECK(check_cn_bound(kMb4.graph()).details["pairs"] == 276);
  const auto r = check_cn_bound(fixtures::complete_bipartite(2, 3));
  CHECK(r.verdict == Verdict::Fail);
  CHECK(r.counterexample["cn"] == 3);
}

TEST_CASE("edge common-neighbor exclusion") {
  CHECK(check_edge_cn_exclusion(kMb4.graph()).verdict == Verdict::ProvedExhaustive);
  CHECK(check_edge_cn_exclusion(kMb5.graph()).verdict == Verdict::ProvedExhaustive);
  CHECK(check_edge_cn_exclusion(fixtures::cycle(6)).verdict == Verdict::ProvedExhaustive);
  const auto k4 = check_edge_cn_exclusion(fixtures::complete(4));
  CHECK(k4.verdict == Verdict::Fail);
  CHECK(k4.counterexample["cn_sp"].get<int>() > 0);
  CHECK(k4.counterexample["cn_sq"].get<int>() > 0);
}

TEST_CASE("common-neighbor triple exclusion") {
  CHECK(check_cn_triple_exclusion(kMb4.graph()).verdict == Verdict::ProvedExhaustive);
  CHECK(check_cn_triple_exclusion(fixtures::hypercube(3)).verdict == Verdict::Fail);

  // MB5 contains u, v, w with u = v(2 3)(4 5), w = v(1 2)(4 5): both pairs
  // with v have two common neighbors and v(4 5) is adjacent to u and w.
  const auto r = check_cn_triple_exclusion(kMb5.graph(), permutation_names(kMb5));
  REQUIRE(r.verdict == Verdict::Fail);
  const Vertex u = v_of(kMb5, r.counterexample["u"].get<std::string>().c_str());
  const Vertex v = v_of(kMb5, r.counterexample["v"].get<std::string>().c_str());
  const Vertex w = v_of(kMb5, r.counterexample["w"].get<std::string>().c_str());
  CHECK(common_neighbor_count(kMb5, u, v) == 2);
  CHECK(common_neighbor_count(kMb5, v, w) == 2);
  CHECK(common_neighbor_count(kMb5, u, w) >= 1);
}

TEST_CASE("isolated vertex census") {
  const auto r = check_isolated_vertex(kMb4.graph(), quick(), permutation_names(kMb4));
  CHECK(r.verdict == Verdict::ProvedExhaustive);
  CHECK(r.details["disconnecting_by_size"] == nlohmann::ordered_json({0, 0, 0, 0, 24, 456}));
  CHECK(r.details["disconnecting_total"] == 480);
  CHECK(r.details["min_disconnecting_size"] == 4);
  CHECK(r.details["size4_all_neighborhoods"] == true);
  const auto b4 = check_isolated_vertex(kB4.graph(), quick());
  CHECK(b4.verdict == Verdict::Fail);
  CHECK(b4.counterexample["fault_set"].size() <= 5);
}

TEST_CASE("large component bounds") {
  const auto r = check_large_component_bounds(kMb4.graph(), quick());
  CHECK(r.verdict == Verdict::ProvedExhaustive);
  CHECK(r.details["disconnecting_by_size"] == nlohmann::ordered_json({0, 0, 0, 0, 24, 456, 4128, 23592}));
  CHECK(r.details["worst_residual_by_size"] == nlohmann::ordered_json({0, 0, 0, 0, 1, 1, 2, 3}));
}

TEST_CASE("connectivity values") {
  for (const auto& g : {mb(3), kMb4, kB4, bubble(3), star(4)}) {
    const auto r = check_connectivity_values(g);
    CHECK(r.verdict == Verdict::ProvedExhaustive);
    CHECK(r.details["kappa"] == r.details["expected"]);
  }
  CHECK(check_connectivity_values(kMb4).details["kappa"] == 4);
  CHECK(check_connectivity_values(kB4).details["kappa"] == 3);
}

TEST_CASE("cross edge counts") {
  CHECK(check_cross_edges(kMb4).details["per_pair_counts"] == nlohmann::ordered_json({4}));
  CHECK(check_cross_edges(kMb5).details["per_pair_counts"] == nlohmann::ordered_json({12}));
  CHECK(check_cross_edges(kUg5).details["per_pair_counts"] == nlohmann::ordered_json({6}));
  CHECK(check_cross_edges(kUg5).verdict == Verdict::ProvedExhaustive);
}

TEST_CASE("out-neighbor structure") {
  for (const auto* g : {&kMb4, &kMb5}) {
    CHECK(check_out_neighbor_disjointness(*g).verdict == Verdict::ProvedExhaustive);
    CHECK(check_out_neighbor_escape(*g).verdict == Verdict::ProvedExhaustive);
  }
  CHECK(check_out_neighbor_escape(kMb4).details["scanned"] == 12);
  CHECK(check_out_neighbor_escape(kMb5).details["scanned"] == 48);
  const auto bad = with_shared_out_neighbor(kMb4);
  const auto r = check_out_neighbor_disjointness(bad);
  CHECK(r.verdict == Verdict::Fail);
  CHECK(r.counterexample.contains("shared"));
}

TEST_CASE("neighborhoods of 4-sets") {
  const auto r4 = check_neighbor_lower_bound(kMb4, quick());
  CHECK(r4.verdict == Verdict::ProvedExhaustive);
  CHECK(r4.details["min_neighborhood"] == 8);
  CHECK(r4.details["four_cycle_neighborhood"] == 8);
  CHECK(r4.witness["set"] == nlohmann::ordered_json({"1234", "1243", "2134", "2143"}));

  const auto r5 = check_neighbor_lower_bound(kMb5, quick());
  CHECK(r5.verdict == Verdict::ProvedExhaustive);
  CHECK(r5.details["min_neighborhood"] == 12);
  CHECK(r5.witness["set"] == nlohmann::ordered_json({"12345", "12354", "12435", "21345"}));

  const auto r6 = check_neighbor_lower_bound(mb(6), quick(5000));
  CHECK(r6.verdict == Verdict::SupportedSampled);
  CHECK(r6.details["min_neighborhood"].get<int>() >= 15);

  const auto b4 = check_neighbor_lower_bound(kB4, quick());
  CHECK(b4.verdict == Verdict::Fail);
}

TEST_CASE("component bounds") {
  CHECK(check_component_bound_p(kMb4, 1, quick()).verdict == Verdict::ProvedExhaustive);
  const auto r = check_component_bound_p(kMb4, 2, quick());
  CHECK(r.verdict == Verdict::ProvedExhaustive);
  CHECK(r.details["max_fault_size"] == 5);
  const auto sampled = check_component_bound_p(kUg5, 2, quick(3000));
  CHECK(sampled.verdict == Verdict::SupportedSampled);
  CHECK(sampled.details["templates"] == 772920);
  CHECK(sampled.details["disconnecting_hits"].get<std::uint64_t>() > 0);
  CHECK(check_component_bound_p(kB4, 1, quick()).verdict == Verdict::Fail);
  CHECK(check_component_bound_p(kB4, 2, quick()).verdict == Verdict::Fail);
  CHECK_THROWS_AS(check_component_bound_p(kMb4, 3, quick()), ArgumentError);
  CHECK_THROWS_AS(check_component_bound_p(kMb4, 0, quick()), ArgumentError);
}

TEST_CASE("4-cycle labels and last-block attachment") {
  const auto r4 = check_4cycle_labels(kMb4);
  CHECK(r4.verdict == Verdict::ProvedExhaustive);
  CHECK(r4.details["four_cycles"] == 12);
  CHECK(check_4cycle_labels(kUg5).details["four_cycles"] == 120);
  const auto obs = check_last_block_attachment(kMb4);
  CHECK(obs.verdict == Verdict::ProvedExhaustive);
  CHECK(obs.details["internal_edges_by_block"] == nlohmann::ordered_json({{"1", 6}, {"2", 6}, {"3", 6}}));
}

TEST_CASE("good-neighbor and cyclic connectivity") {
  const auto g2 = check_good_neighbor_exact(kMb4, quick());
  CHECK(g2.verdict == Verdict::ProvedExhaustive);
  CHECK(g2.details["kappa2"] == 8);
  const auto exact = check_cyclic_connectivity(kMb4, CyclicMode::Exact, quick());
  CHECK(exact.verdict == Verdict::ProvedExhaustive);
  CHECK(exact.details["kappa_c"] == 8);
  const auto upper = check_cyclic_connectivity(ug(6), CyclicMode::Upper, quick());
  CHECK(upper.verdict == Verdict::ProvedExhaustive);
  CHECK(upper.details["size"] == 16);
  const auto falsify = check_cyclic_connectivity(kUg5, CyclicMode::Falsify, quick(20'000));
  CHECK(falsify.verdict == Verdict::SupportedSampled);
  CHECK(falsify.scope.find("seed 5") != std::string::npos);
}

TEST_CASE("verify_all on MB4") {
  const auto report = verify_all(kMb4, "mb:4", quick());
  CHECK(report.checks.size() == check_ids().size());
  for (std::size_t i = 0; i < report.checks.size(); ++i) CHECK(report.checks[i].id == check_ids()[i]);
  CHECK_FALSE(report.any_gating_failure());
  for (const auto& c : report.checks) {
    CAPTURE(c.id);
    if (c.id == "cyclic-falsify") {
      CHECK(c.verdict == Verdict::Skipped);
    } else {
      CHECK(passed(c));
    }
  }
}

TEST_CASE("reports are independent of worker count") {
  const auto a = to_json(verify_all(kMb4, "mb:4", quick(20'000, 1)), false);
  const auto b = to_json(verify_all(kMb4, "mb:4", quick(20'000, 8)), false);
  CHECK(a.dump() == b.dump());
  const auto c = to_json(verify_all(kUg5, "ug:5:c=4", quick(20'000, 1), {"component-bound-p2", "cyclic-falsify"}), false);
  const auto d = to_json(verify_all(kUg5, "ug:5:c=4", quick(20'000, 8), {"component-bound-p2", "cyclic-falsify"}), false);
  CHECK(c.dump() == d.dump());
}

TEST_CASE("verify_all selection, skips and errors") {
  const auto single = verify_all(kMb4, "mb:4", quick(), {"cn-bound"});
  REQUIRE(single.checks.size() == 1);
  CHECK(single.checks[0].id == "cn-bound");
  CHECK_THROWS_AS(verify_all(kMb4, "mb:4", quick(), {"no-such-check"}), ArgumentError);

  const auto b4 = verify_all(kB4, "bubble:4", quick());
  for (const auto& c : b4.checks) {
    CAPTURE(c.id);
    CHECK((c.id == "connectivity") == (c.verdict != Verdict::Skipped));
    if (c.verdict == Verdict::Skipped) CHECK_FALSE(c.scope.empty());
  }

  auto opts = quick();
  opts.budget_seconds = 1e-9;
  const auto starved = verify_all(kMb4, "mb:4", opts);
  CHECK(std::count_if(starved.checks.begin(), starved.checks.end(),
                      [](const CheckRecord& c) { return c.verdict == Verdict::Skipped; }) >= 16);
}

TEST_CASE("exploratory checks do not gate") {
  const auto r = verify_all(kUg5, "ug:5:c=4", quick(), {"edge-cn-exclusion", "cn-triple-exclusion"});
  for (const auto& c : r.checks) CHECK_FALSE(c.gating);
  CHECK(r.checks[1].verdict == Verdict::Fail);
  CHECK_FALSE(r.any_gating_failure());
}

TEST_CASE("corrupted fixture fails the suite") {
  const auto bad = with_shared_out_neighbor(kMb4);
  const auto report = verify_all(bad, "fixture:mb4-corrupt", quick());
  CHECK(report.any_gating_failure());
  for (const auto& c : report.checks) {
    if (c.failed()) CHECK_FALSE(c.counterexample.is_null());
  }
  const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                               [](const CheckRecord& c) { return c.id == "out-neighbor-disjoint"; });
  REQUIRE(it != report.checks.end());
  CHECK(it->verdict == Verdict::Fail);
}

TEST_CASE("JSON report round trip and text rendering") {
  const auto report = verify_all(kMb4, "mb:4", quick(), {"cn-bound", "cyclic-upper"});
  const auto j = to_json(report);
  CHECK(j["schema"] == 1);
  CHECK(j["tool"]["name"] == "cayconn");
  CHECK(j["graph"]["order"] == 24);
  CHECK(j["summary"]["status"] == "pass");
  CHECK(j["checks"][0].contains("millis"));
  CHECK_FALSE(to_json(report, false)["checks"][0].contains("millis"));
  const auto back = report_from_json(j);
  CHECK(to_json(back).dump() == j.dump());
  const auto text = to_text(report);
  CHECK(text.find("cn-bound") != std::string::npos);
  CHECK(text.find("PROVED-EXHAUSTIVE") != std::string::npos);
  CHECK(text.find("-> PASS") != std::string::npos);
  CHECK_THROWS_AS(report_from_json(nlohmann::ordered_json{{"schema", 1}}), ValidationError);
}
