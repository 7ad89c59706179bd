// Command-line driver for the cayconn library.
//
// Exit status: 0 success, 1 a verification check failed, 2 usage or input
// error, 3 capacity error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cayconn/cayley.hpp"
#include "cayconn/cuts.hpp"
#include "cayconn/errors.hpp"
#include "cayconn/export.hpp"
#include "cayconn/lab.hpp"
#include "cayconn/maxflow.hpp"
#include "cayconn/topology.hpp"
#include "cayconn/version.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace cayconn;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct Common {
  std::vector<std::string> positional;
  std::string spec;
  std::string format;
  std::string out;
  unsigned workers = 0;
  std::uint64_t seed = 0;
};

// The topology is --spec, or the first positional token plus any "n=..."
// token right after it. Remaining positionals are returned in `rest`.
Topology resolve_topology(const Common& c, std::vector<std::string>* rest = nullptr) {
  std::string text = c.spec;
  std::size_t i = 0;
  if (text.empty()) {
    if (c.positional.empty()) throw ArgumentError("missing topology: pass --spec or a positional spec");
    text = c.positional[0];
    i = 1;
    if (i < c.positional.size() && c.positional[i].rfind("n=", 0) == 0) text += " " + c.positional[i++];
  }
  if (rest) rest->assign(c.positional.begin() + static_cast<std::ptrdiff_t>(i), c.positional.end());
  else if (i < c.positional.size()) throw ArgumentError("unexpected argument '" + c.positional[i] + "'");
  return parse_topology(text);
}

unsigned resolve_workers(const Common& c) { return c.workers ? c.workers : default_workers(); }

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ArgumentError("cannot open --out file '" + path + "'");
  f << text;
  if (!f) throw ArgumentError("failed writing --out file '" + path + "'");
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw ArgumentError("--format '" + format + "' not supported here (choose " + list + ")");
}

json fault_json(const CayleyGraph& g, const FaultSet& f) {
  json a = json::array();
  for (Vertex v : f.members()) a.push_back(g.label(v));
  return a;
}

int cmd_gen(const Common& c) {
  const auto t = resolve_topology(c);
  const std::string format = c.format.empty() ? "dot" : c.format;
  require_format(format, {"dot", "graph6", "edgelist", "text", "json"});
  if (format == "graph6" && factorial(t.generators.n()) > kGraph6MaxOrder) {
    throw CapacityError("graph6 output supports at most " + std::to_string(kGraph6MaxOrder) +
                        " vertices (n <= 4); use --format edgelist");
  }
  const auto g = materialize(t);
  if (format == "dot") {
    emit(to_dot(g, t.spec), c.out);
  } else if (format == "graph6") {
    emit(to_graph6(g.graph()), c.out);
  } else if (format == "json") {
    json vertices = json::array();
    for (Vertex v = 0; v < g.order(); ++v) vertices.push_back(g.label(v));
    json edges = json::array();
    for (auto [u, v] : g.graph().edge_list()) edges.push_back({u, v});
    const json j = {{"spec", t.spec},
                    {"resolved_spec", t.resolved},
                    {"n", g.n()},
                    {"order", g.order()},
                    {"degree", g.generators().edges().size()},
                    {"vertices", vertices},
                    {"edges", edges}};
    emit(j.dump(2) + "\n", c.out);
  } else {
    emit(to_edge_list(g), c.out);
  }
  return kExitPass;
}

int cmd_info(const Common& c) {
  const auto t = resolve_topology(c);
  const std::string format = c.format.empty() ? "text" : c.format;
  require_format(format, {"text", "json"});
  const auto g = materialize(t);
  const Graph& graph = g.graph();
  const auto gir = girth(g);
  json anchors = json::array();
  for (int a : g.peel().anchors) anchors.push_back(a);
  const json j = {{"spec", t.spec},
                  {"resolved_spec", t.resolved},
                  {"n", g.n()},
                  {"class", std::string(to_string(g.generators().cls()))},
                  {"generators", g.generators().edge_string()},
                  {"order", graph.order()},
                  {"size", graph.size()},
                  {"degree", graph.max_degree()},
                  {"regular", graph.is_regular()},
                  {"bipartite", is_bipartite(graph)},
                  {"girth", gir ? json(*gir) : json(nullptr)},
                  {"four_cycles", enumerate_4cycles(graph).size()},
                  {"peel_position", g.peel().position},
                  {"peel_anchors", anchors}};
  if (format == "json") {
    emit(j.dump(2) + "\n", c.out);
    return kExitPass;
  }
  std::ostringstream os;
  for (const auto& [k, v] : j.items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  emit(os.str(), c.out);
  return kExitPass;
}

int cmd_connectivity(const Common& c, const std::string& mode) {
  const auto t = resolve_topology(c);
  const std::string format = c.format.empty() ? "text" : c.format;
  require_format(format, {"text", "json"});
  PairScan scan = PairScan::SingleSource;
  if (mode == "all-pairs") {
    scan = PairScan::AllPairs;
  } else if (!mode.empty() && mode != "single-source") {
    throw ArgumentError("--mode '" + mode + "' not supported here (choose single-source, all-pairs)");
  }
  const auto g = materialize(t);
  const auto r = vertex_connectivity(g.graph(), scan);
  if (format == "json") {
    const json j = {{"spec", t.spec},
                    {"kappa", r.value},
                    {"complete", r.complete},
                    {"source", g.label(r.source)},
                    {"target", g.label(r.target)},
                    {"min_cut", fault_json(g, r.min_cut)}};
    emit(j.dump(2) + "\n", c.out);
    return kExitPass;
  }
  std::ostringstream os;
  os << "kappa=" << r.value << (r.complete ? " (complete graph)" : "") << "\n";
  if (!r.complete) {
    os << "min_cut=";
    for (std::size_t i = 0; i < r.min_cut.size(); ++i) os << (i ? "," : "") << g.label(r.min_cut.members()[i]);
    os << "\n";
  }
  emit(os.str(), c.out);
  return kExitPass;
}

CutCriterion parse_kind(const std::string& kind) {
  if (kind == "cyclic") return CutCriterion::cyclic();
  if (kind == "vertex") return CutCriterion::vertex();
  const std::string prefix = "good-neighbor:";
  if (kind.rfind(prefix, 0) == 0) {
    const std::string tail = kind.substr(prefix.size());
    std::size_t used = 0;
    int g = -1;
    try {
      g = std::stoi(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tail.size() || tail.empty() || g < 0) throw ArgumentError("--kind '" + kind + "': bad g value");
    return CutCriterion::good_neighbor(g);
  }
  throw ArgumentError("--kind '" + kind + "' not supported (choose cyclic, vertex, good-neighbor:<g>)");
}

int cmd_cut_search(const Common& c, const std::string& kind, std::size_t max_size, const std::string& mode,
                   std::uint64_t trials) {
  const auto t = resolve_topology(c);
  const std::string format = c.format.empty() ? "text" : c.format;
  require_format(format, {"text", "json"});
  const auto criterion = parse_kind(kind);
  const std::string m = mode.empty() ? "exhaustive" : mode;
  if (m != "exhaustive" && m != "random") {
    throw ArgumentError("--mode '" + m + "' not supported here (choose exhaustive, random)");
  }
  if (m == "random" && criterion.kind != CutKind::Cyclic) throw ArgumentError("--mode random requires --kind cyclic");
  const auto g = materialize(t);
  const SearchOptions opts{resolve_workers(c)};
  std::optional<CutWitness> w;
  if (m == "exhaustive") {
    w = min_cut_exhaustive(g.graph(), criterion, max_size, opts);
  } else {
    w = randomized_cut_falsifier(g.graph(), max_size, trials, c.seed, opts);
  }

  json j = {{"spec", t.spec},
            {"resolved_spec", t.resolved},
            {"kind", criterion.to_string()},
            {"mode", m},
            {"max_size", max_size}};
  if (m == "random") {
    j["trials"] = trials;
    j["seed"] = c.seed;
  }
  if (w) {
    json sizes = json::array();
    for (const auto& comp : w->analysis.components) sizes.push_back(comp.vertex_count);
    j["witness"] = {{"size", w->fault_set.size()},
                    {"fault_set", fault_json(g, w->fault_set)},
                    {"component_sizes", sizes},
                    {"cyclic_components", w->analysis.cyclic_component_count()}};
  } else {
    j["witness"] = nullptr;
  }

  if (w && !c.out.empty()) {
    std::ostringstream f;
    f << "kind=" << criterion.to_string() << "\n";
    f << "size=" << w->fault_set.size() << "\n";
    f << "graph=" << t.spec << "\n";
    for (Vertex v : w->fault_set.members()) f << g.label(v) << "\n";
    emit(f.str(), c.out);
  }
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (w) {
    std::cout << "witness " << criterion.to_string() << " size=" << w->fault_set.size() << "\n";
    for (const auto& v : j["witness"]["fault_set"]) std::cout << v.get<std::string>() << "\n";
  } else {
    std::cout << "none\n";
  }
  return kExitPass;
}

std::vector<std::string> split_checks(const std::vector<std::string>& tokens) {
  std::vector<std::string> ids;
  for (const auto& token : tokens) {
    std::stringstream ss(token);
    std::string id;
    while (std::getline(ss, id, ',')) {
      if (id.empty()) continue;
      if (id == "all") return {};
      ids.push_back(id);
    }
  }
  return ids;
}

int cmd_verify(const Common& c, std::vector<std::string> checks, double budget, std::uint64_t trials) {
  std::vector<std::string> rest;
  const auto t = resolve_topology(c, &rest);
  checks.insert(checks.end(), rest.begin(), rest.end());
  const std::string format = c.format.empty() ? (c.out.empty() ? "text" : "json") : c.format;
  require_format(format, {"text", "json"});
  if (!(budget > 0)) throw ArgumentError("--budget must be positive");
  if (trials == 0) throw ArgumentError("--trials must be positive");
  const auto ids = split_checks(checks);
  const auto g = materialize(t);
  lab::LabOptions opts;
  opts.workers = resolve_workers(c);
  opts.seed = c.seed;
  opts.budget_seconds = budget;
  opts.trials = trials;
  const auto report = lab::verify_all(g, t.spec, opts, ids, t.resolved);
  emit(format == "json" ? lab::to_json(report).dump(2) + "\n" : lab::to_text(report), c.out);
  if (!c.out.empty()) std::cerr << (report.any_gating_failure() ? "FAIL" : "PASS") << " (report: " << c.out << ")\n";
  return report.any_gating_failure() ? kExitCheckFailure : kExitPass;
}

int cmd_report(const Common& c) {
  if (c.positional.size() != 1) throw ArgumentError("report expects exactly one JSON report file");
  const std::string& path = c.positional[0];
  std::ifstream f(path);
  if (!f) throw ArgumentError("cannot open report '" + path + "'");
  json j;
  try {
    j = json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("report '" + path + "' is not valid JSON: " + e.what());
  }
  const auto report = lab::report_from_json(j);
  const std::string format = c.format.empty() ? "text" : c.format;
  require_format(format, {"text", "json"});
  emit(format == "json" ? lab::to_json(report).dump(2) + "\n" : lab::to_text(report), c.out);
  return report.any_gating_failure() ? kExitCheckFailure : kExitPass;
}

void add_common(CLI::App* sub, Common& c, bool with_search) {
  sub->add_option("topology", c.positional, "Topology spec (mb:<n>, bubble:<n>, star:<n>, ug:<n>:c=<c>, edges:...)");
  sub->add_option("--spec", c.spec, "Topology spec (alternative to the positional form)");
  sub->add_option("--format", c.format, "Output format");
  sub->add_option("--out", c.out, "Output file (default stdout)");
  if (with_search) {
    sub->add_option("--workers", c.workers, "Worker threads (default: CAYCONN_WORKERS or hardware concurrency)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "Random seed");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley graphs of Sym(n) from transposition generators: connectivity, cuts and checks"};
  app.set_version_flag("--version", std::string(kToolName) + " " + std::string(kVersion));
  app.require_subcommand(1);

  Common common;
  std::string kind = "cyclic";
  std::size_t max_size = 8;
  std::string mode;
  std::vector<std::string> checks;
  double budget = 600.0;
  std::uint64_t trials = 1'000'000;

  auto* gen = app.add_subcommand("gen", "Write the Cayley graph (dot, graph6, edgelist, json)");
  add_common(gen, common, false);
  auto* info = app.add_subcommand("info", "Print structural invariants");
  add_common(info, common, false);
  auto* conn = app.add_subcommand("connectivity", "Compute the vertex connectivity and a minimum cut");
  add_common(conn, common, false);
  conn->add_option("--mode", mode, "single-source (default) or all-pairs");
  auto* cut = app.add_subcommand("cut-search", "Search for a minimum cut of the given kind");
  add_common(cut, common, true);
  cut->add_option("--kind", kind, "cyclic, vertex or good-neighbor:<g>");
  cut->add_option("--max-size", max_size, "Largest fault set to consider");
  cut->add_option("--mode", mode, "exhaustive (default) or random");
  cut->add_option("--trials", trials, "Trials for --mode random");
  auto* verify = app.add_subcommand("verify", "Run the structural check suite");
  add_common(verify, common, true);
  verify->add_option("--checks", checks, "Comma-separated check ids or 'all'")->delimiter(',');
  verify->add_option("--budget", budget, "Wall-clock budget in seconds");
  verify->add_option("--trials", trials, "Trials for sampled checks");
  auto* report = app.add_subcommand("report", "Render a saved JSON report");
  report->add_option("file", common.positional, "Report produced by verify --format json")->required();
  report->add_option("--format", common.format, "text (default) or json");
  report->add_option("--out", common.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(common);
    if (*info) return cmd_info(common);
    if (*conn) return cmd_connectivity(common, mode);
    if (*cut) return cmd_cut_search(common, kind, max_size, mode, trials);
    if (*verify) return cmd_verify(common, checks, budget, trials);
    if (*report) return cmd_report(common);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
