#pragma once

// Executable structural checks for unicyclic-generated Cayley graphs. Each
// check returns a CheckRecord that either proves its claim exhaustively on
// the given instance, supports it on a seeded sample, or fails with a
// concrete counterexample written in permutation form.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cayconn/cayley.hpp"
#include "cayconn/cuts.hpp"
#include "json.hpp"

namespace cayconn::lab {

inline constexpr int kSuiteVersion = 1;
inline constexpr int kReportSchema = 1;

enum class Verdict { ProvedExhaustive, SupportedSampled, Fail, Skipped };

/// "PROVED-EXHAUSTIVE", "SUPPORTED-SAMPLED", "FAIL", "SKIPPED".
std::string_view to_string(Verdict v);

struct CheckRecord {
  std::string id;
  std::string claim;
  std::string scope;
  Verdict verdict = Verdict::Skipped;
  bool gating = true;  // exploratory checks never fail a run
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  nlohmann::ordered_json witness;         // null when absent
  nlohmann::ordered_json counterexample;  // null when absent
  std::int64_t millis = 0;

  bool failed() const { return verdict == Verdict::Fail; }
};

struct LabOptions {
  unsigned workers = default_workers();
  std::uint64_t seed = 0;
  std::uint64_t trials = 1'000'000;  // sampled checks and the falsifier
  double budget_seconds = 600.0;
};

struct VerificationReport {
  std::string spec;
  std::string resolved_spec;
  int n = 0;
  std::string generators;
  std::string generator_class;
  std::uint64_t order = 0;
  std::size_t degree = 0;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;

  bool any_gating_failure() const;
};

using VertexNamer = std::function<std::string(Vertex)>;
VertexNamer decimal_names();
VertexNamer permutation_names(const CayleyGraph& g);

/// All check ids in report order.
const std::vector<std::string>& check_ids();

// Graph-only checks; usable on control fixtures.
CheckRecord check_cn_bound(const Graph& g, const VertexNamer& name = decimal_names(), std::size_t bound = 2);
CheckRecord check_edge_cn_exclusion(const Graph& g, const VertexNamer& name = decimal_names());
/// No distinct u, v, w with cn(u,v) = 2, cn(v,w) = 2 and cn(u,w) >= 1.
CheckRecord check_cn_triple_exclusion(const Graph& g, const VertexNamer& name = decimal_names());
/// Every disconnecting F with |F| <= 5 leaves two components, one a single vertex.
CheckRecord check_isolated_vertex(const Graph& g, const LabOptions& opts,
                                        const VertexNamer& name = decimal_names());
/// Disconnecting F: residual <= 2 for |F| <= 6 and <= 3 for |F| <= 7.
CheckRecord check_large_component_bounds(const Graph& g, const LabOptions& opts,
                                         const VertexNamer& name = decimal_names());

// Checks that use the permutation and block structure.
CheckRecord check_connectivity_values(const CayleyGraph& g);
CheckRecord check_cross_edges(const CayleyGraph& g);
CheckRecord check_out_neighbor_disjointness(const CayleyGraph& g);
CheckRecord check_out_neighbor_escape(const CayleyGraph& g);
CheckRecord check_neighbor_lower_bound(const CayleyGraph& g, const LabOptions& opts);
CheckRecord check_component_bound_p(const CayleyGraph& g, int p, const LabOptions& opts);
CheckRecord check_4cycle_labels(const CayleyGraph& g);
CheckRecord check_last_block_attachment(const CayleyGraph& g);
CheckRecord check_good_neighbor_exact(const CayleyGraph& g, const LabOptions& opts);

enum class CyclicMode { Exact, Upper, Falsify };
CheckRecord check_cyclic_connectivity(const CayleyGraph& g, CyclicMode mode, const LabOptions& opts);

/// Runs every check id (or those in `only`) that applies to g's class and
/// size, recording the rest as SKIPPED with a reason. Throws ArgumentError
/// for an unknown id in `only`.
VerificationReport verify_all(const CayleyGraph& g, const std::string& spec, const LabOptions& opts,
                              const std::vector<std::string>& only = {}, const std::string& resolved_spec = {});

/// JSON report; with include_timing=false every "millis" field is dropped,
/// leaving the deterministic body.
nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing = true);
VerificationReport report_from_json(const nlohmann::ordered_json& j);
std::string to_text(const VerificationReport& r);

}  // namespace cayconn::lab
