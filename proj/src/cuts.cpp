#include "cayconn/cuts.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <thread>

#include "cayconn/detail/masks.hpp"
#include "cayconn/detail/parallel.hpp"
#include "cayconn/errors.hpp"

namespace cayconn {

namespace {

bool holds(const detail::CutProfile& p, CutCriterion c) {
  switch (c.kind) {
    case CutKind::Vertex: return p.disconnected();
    case CutKind::GoodNeighbor: return p.good_neighbor_cut(c.g);
    case CutKind::Cyclic: return p.cyclic_cut();
  }
  return false;
}

void check_members(const Graph& g, std::span<const Vertex> vs) {
  for (Vertex v : vs) {
    if (v >= g.order()) {
      throw ArgumentError("vertex " + std::to_string(v) + " outside graph of order " + std::to_string(g.order()));
    }
  }
}

}  // namespace

std::string CutCriterion::to_string() const {
  switch (kind) {
    case CutKind::Vertex: return "vertex-cut";
    case CutKind::GoodNeighbor: return "good-neighbor-cut(" + std::to_string(g) + ")";
    case CutKind::Cyclic: return "cyclic-cut";
  }
  return "vertex-cut";
}

bool CutCriterion::holds(const CutAnalysis& a) const {
  switch (kind) {
    case CutKind::Vertex: return a.disconnected();
    case CutKind::GoodNeighbor:
      return a.disconnected() && static_cast<std::int64_t>(a.min_survivor_degree()) >= g;
    case CutKind::Cyclic: return a.disconnected() && a.cyclic_component_count() >= 2;
  }
  return false;
}

unsigned default_workers() {
  if (const char* env = std::getenv("CAYCONN_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

bool is_vertex_cut(const Graph& g, const FaultSet& f) { return CutCriterion::vertex().holds(components(g, f)); }

bool is_cyclic_cut(const Graph& g, const FaultSet& f) { return CutCriterion::cyclic().holds(components(g, f)); }

bool is_good_neighbor_cut(const Graph& g, const FaultSet& f, int good) {
  if (good < 0) throw ArgumentError("good-neighbor parameter must be >= 0");
  return CutCriterion::good_neighbor(good).holds(components(g, f));
}

std::optional<CutWitness> min_cut_exhaustive(const Graph& g, CutCriterion criterion, std::size_t max_size,
                                             const SearchOptions& opts) {
  const auto universe = static_cast<std::uint32_t>(g.order());
  const std::size_t top = std::min<std::size_t>(max_size, universe);
  return detail::with_analyzer(g, [&](auto make) -> std::optional<CutWitness> {
    for (std::size_t k = 0; k <= top; ++k) {
      std::optional<std::vector<Vertex>> found;
      if (k == 0) {
        auto analyzer = make();
        if (holds(analyzer.analyze({}), criterion)) found.emplace();
      } else {
        // Parts are smallest elements; once part p has a witness, larger
        // parts cannot beat it lexicographically.
        std::atomic<std::size_t> cutoff{universe};
        auto results = detail::run_parts(
            universe, opts.workers,
            [&] { return std::pair{make(), std::vector<Vertex>{}}; },
            [&](auto& state, std::size_t part) -> std::optional<std::vector<Vertex>> {
              if (part > cutoff.load()) return std::nullopt;
              std::optional<std::vector<Vertex>> hit;
              detail::for_each_subset_from(universe, k, static_cast<Vertex>(part), state.second,
                                           [&](std::span<const Vertex> s) {
                                             if (!holds(state.first.analyze(s), criterion)) return true;
                                             hit.emplace(s.begin(), s.end());
                                             return false;
                                           });
              if (hit) {
                std::size_t cur = cutoff.load();
                while (part < cur && !cutoff.compare_exchange_weak(cur, part)) {
                }
              }
              return hit;
            });
        for (auto& r : results) {
          if (r) {
            found = std::move(r);
            break;
          }
        }
      }
      if (found) {
        FaultSet f(std::move(*found));
        CutAnalysis a = components(g, f);
        return CutWitness{std::move(f), criterion, std::move(a)};
      }
    }
    return std::nullopt;
  });
}

FaultSet build_cycle_neighborhood_cut(const Graph& g, const FourCycle& c) {
  check_members(g, c);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (c[i] == c[j]) throw ArgumentError("4-cycle vertices must be distinct");
    }
    if (!g.adjacent(c[i], c[(i + 1) % 4])) {
      throw ArgumentError("vertices " + std::to_string(c[i]) + " and " + std::to_string(c[(i + 1) % 4]) +
                          " are not adjacent, so the sequence is not a 4-cycle");
    }
  }
  std::vector<Vertex> out;
  for (Vertex v : c) {
    for (Vertex w : g.neighbors(v)) {
      if (std::find(c.begin(), c.end(), w) == c.end()) out.push_back(w);
    }
  }
  return FaultSet(std::move(out));
}

namespace {

constexpr std::uint64_t kTrialsPerChunk = 1024;

template <class Analyzer>
class FalsifierTrial {
 public:
  FalsifierTrial(const Graph& g, const std::vector<FourCycle>& cycles, std::size_t target, Analyzer analyzer)
      : g_(g), cycles_(cycles), target_(target), analyzer_(std::move(analyzer)), in_region_(g.order(), 0) {}

  /// Returns the candidate when it is a cyclic cut of size <= target.
  std::optional<std::vector<Vertex>> run(std::mt19937_64& rng) {
    const auto strategy = rng() % (cycles_.empty() ? 1 : 3);
    switch (strategy) {
      case 0: grow_region(rng); break;
      case 1: cycle_core(rng); break;
      default: perturbed_core(rng); break;
    }
    trim(rng);
    std::sort(candidate_.begin(), candidate_.end());
    if (candidate_.empty()) return std::nullopt;
    if (!analyzer_.analyze(candidate_).cyclic_cut()) return std::nullopt;
    return candidate_;
  }

 private:
  Vertex random_vertex(std::mt19937_64& rng) {
    return static_cast<Vertex>(rng() % g_.order());
  }

  void cycle_core(std::mt19937_64& rng) {
    const FourCycle& c = cycles_[rng() % cycles_.size()];
    analyzer_.neighborhood(std::span<const Vertex>(c.data(), c.size()), candidate_);
  }

  // Swap a few members of N(C) for vertices at distance two from C.
  void perturbed_core(std::mt19937_64& rng) {
    const FourCycle& c = cycles_[rng() % cycles_.size()];
    analyzer_.neighborhood(std::span<const Vertex>(c.data(), c.size()), candidate_);
    const std::size_t drops = 1 + rng() % 3;
    for (std::size_t i = 0; i < drops && !candidate_.empty(); ++i) {
      const std::size_t at = rng() % candidate_.size();
      const Vertex dropped = candidate_[at];
      candidate_.erase(candidate_.begin() + static_cast<std::ptrdiff_t>(at));
      auto nb = g_.neighbors(dropped);
      const Vertex add = nb[rng() % nb.size()];
      if (std::find(c.begin(), c.end(), add) == c.end() &&
          std::find(candidate_.begin(), candidate_.end(), add) == candidate_.end()) {
        candidate_.push_back(add);
      }
    }
  }

  // Greedy region growth favouring boundary vertices with many neighbors
  // already inside, which keeps |N(R)| small.
  void grow_region(std::mt19937_64& rng) {
    region_.assign(1, random_vertex(rng));
    in_region_[region_[0]] = 1;
    const std::size_t size = 1 + rng() % 10;
    while (region_.size() < size) {
      Vertex best = 0;
      int best_score = -1;
      for (Vertex r : region_) {
        for (Vertex w : g_.neighbors(r)) {
          if (in_region_[w]) continue;
          int score = 0;
          for (Vertex x : g_.neighbors(w)) score += in_region_[x];
          score = score * 4 + static_cast<int>(rng() % 4);
          if (score > best_score) {
            best_score = score;
            best = w;
          }
        }
      }
      if (best_score < 0) break;
      region_.push_back(best);
      in_region_[best] = 1;
    }
    analyzer_.neighborhood(region_, candidate_);
    for (Vertex r : region_) in_region_[r] = 0;
  }

  void trim(std::mt19937_64& rng) {
    while (candidate_.size() > target_) {
      const std::size_t at = rng() % candidate_.size();
      candidate_[at] = candidate_.back();
      candidate_.pop_back();
    }
  }

  const Graph& g_;
  const std::vector<FourCycle>& cycles_;
  std::size_t target_;
  Analyzer analyzer_;
  std::vector<Vertex> candidate_;
  std::vector<Vertex> region_;
  std::vector<std::uint8_t> in_region_;
};

}  // namespace

std::optional<CutWitness> randomized_cut_falsifier(const Graph& g, std::size_t target_size, std::uint64_t trials,
                                                   std::uint64_t seed, const SearchOptions& opts) {
  if (trials == 0) throw ArgumentError("randomized_cut_falsifier needs trials >= 1");
  if (g.order() == 0) return std::nullopt;
  const std::vector<FourCycle> cycles = enumerate_4cycles(g);
  const std::uint64_t chunks = (trials + kTrialsPerChunk - 1) / kTrialsPerChunk;
  return detail::with_analyzer(g, [&](auto make) -> std::optional<CutWitness> {
    using Analyzer = decltype(make());
    std::atomic<std::uint64_t> cutoff{chunks};
    auto results = detail::run_parts(
        static_cast<std::size_t>(chunks), opts.workers,
        [&] { return FalsifierTrial<Analyzer>(g, cycles, target_size, make()); },
        [&](auto& trial, std::size_t chunk) -> std::optional<std::vector<Vertex>> {
          if (chunk > cutoff.load()) return std::nullopt;
          std::mt19937_64 rng(detail::mix_seed(seed, chunk));
          const std::uint64_t begin = chunk * kTrialsPerChunk;
          const std::uint64_t end = std::min(trials, begin + kTrialsPerChunk);
          for (std::uint64_t t = begin; t < end; ++t) {
            if (auto hit = trial.run(rng)) {
              std::uint64_t cur = cutoff.load();
              while (chunk < cur && !cutoff.compare_exchange_weak(cur, chunk)) {
              }
              return hit;
            }
          }
          return std::nullopt;
        });
    for (auto& r : results) {
      if (r) {
        FaultSet f(std::move(*r));
        CutAnalysis a = components(g, f);
        return CutWitness{std::move(f), CutCriterion::cyclic(), std::move(a)};
      }
    }
    return std::nullopt;
  });
}

ComponentProfile large_component_profile(const Graph& g, const FaultSet& f) {
  const CutAnalysis a = components(g, f);
  return {a.largest(), a.residual()};
}

}  // namespace cayconn
