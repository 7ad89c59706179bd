#pragma once

// Allocation-free component profiling for the exhaustive and randomized
// searches. MaskAnalyzer<W> keeps one W-word neighbor bitmask per vertex
// (graphs up to 64*W vertices); GenericAnalyzer handles any order with
// flag arrays. Both expose the same analyze()/neighborhood() surface so
// search loops are written once as templates.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cayconn/graph.hpp"

namespace cayconn::detail {

struct CutProfile {
  std::uint32_t survivors = 0;
  std::uint32_t components = 0;
  std::uint32_t cyclic_components = 0;
  std::uint32_t largest = 0;
  std::uint32_t min_degree = 0;  // over all survivors

  std::uint32_t residual() const { return survivors - largest; }
  bool disconnected() const { return components >= 2; }
  bool cyclic_cut() const { return components >= 2 && cyclic_components >= 2; }
  bool good_neighbor_cut(int g) const {
    return components >= 2 && static_cast<std::int64_t>(min_degree) >= g;
  }
};

template <std::size_t W>
struct Mask {
  std::array<std::uint64_t, W> w{};

  void set(Vertex v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
  bool test(Vertex v) const { return (w[v >> 6] >> (v & 63)) & 1U; }
  bool any() const {
    for (auto x : w) {
      if (x) return true;
    }
    return false;
  }
  std::uint32_t count() const {
    std::uint32_t c = 0;
    for (auto x : w) c += static_cast<std::uint32_t>(std::popcount(x));
    return c;
  }
  Vertex lowest() const {
    for (std::size_t i = 0; i < W; ++i) {
      if (w[i]) return static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w[i])));
    }
    return static_cast<Vertex>(W * 64);
  }
  Mask& operator|=(const Mask& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] |= o.w[i];
    return *this;
  }
  Mask operator&(const Mask& o) const {
    Mask r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  Mask and_not(const Mask& o) const {
    Mask r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < W; ++i) {
      for (std::uint64_t x = w[i]; x; x &= x - 1) {
        f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(x))));
      }
    }
  }
};

template <std::size_t W>
class MaskAnalyzer {
 public:
  using MaskType = Mask<W>;

  explicit MaskAnalyzer(const Graph& g) : order_(static_cast<std::uint32_t>(g.order())), nbr_(g.order()) {
    if (g.order() > 64 * W) throw std::logic_error("MaskAnalyzer: graph too large for mask width");
    for (Vertex v = 0; v < order_; ++v) {
      all_.set(v);
      for (Vertex w : g.neighbors(v)) nbr_[v].set(w);
    }
  }

  std::uint32_t order() const { return order_; }
  const MaskType& neighbors(Vertex v) const { return nbr_[v]; }

  MaskType mask_of(std::span<const Vertex> vs) const {
    MaskType m;
    for (Vertex v : vs) m.set(v);
    return m;
  }

  CutProfile analyze(std::span<const Vertex> removed) const { return analyze_mask(mask_of(removed)); }

  CutProfile analyze_mask(const MaskType& removed) const {
    CutProfile p;
    const MaskType alive = all_.and_not(removed);
    p.survivors = alive.count();
    p.min_degree = p.survivors ? ~std::uint32_t{0} : 0;
    MaskType unvisited = alive;
    while (unvisited.any()) {
      const Vertex s = unvisited.lowest();
      MaskType comp;
      comp.set(s);
      MaskType frontier = comp;
      std::uint32_t degree_sum = 0;
      std::uint32_t size = 0;
      while (frontier.any()) {
        MaskType next;
        frontier.for_each([&](Vertex v) {
          const MaskType live = nbr_[v] & alive;
          const std::uint32_t d = live.count();
          degree_sum += d;
          ++size;
          p.min_degree = std::min(p.min_degree, d);
          next |= live;
        });
        next = next.and_not(comp);
        comp |= next;
        frontier = next;
      }
      unvisited = unvisited.and_not(comp);
      ++p.components;
      if (degree_sum / 2 >= size) ++p.cyclic_components;
      p.largest = std::max(p.largest, size);
    }
    return p;
  }

  /// |N(S) \ S|.
  std::uint32_t neighborhood_size(std::span<const Vertex> s) const {
    MaskType inside = mask_of(s);
    MaskType nb;
    for (Vertex v : s) nb |= nbr_[v];
    return nb.and_not(inside).count();
  }

  void neighborhood(std::span<const Vertex> s, std::vector<Vertex>& out) const {
    MaskType inside = mask_of(s);
    MaskType nb;
    for (Vertex v : s) nb |= nbr_[v];
    out.clear();
    nb.and_not(inside).for_each([&](Vertex v) { out.push_back(v); });
  }

 private:
  std::uint32_t order_;
  MaskType all_;
  std::vector<MaskType> nbr_;
};

class GenericAnalyzer {
 public:
  explicit GenericAnalyzer(const Graph& g)
      : g_(&g), removed_(g.order(), 0), seen_(g.order(), 0), mark_(g.order(), 0) {
    queue_.reserve(g.order());
  }

  std::uint32_t order() const { return static_cast<std::uint32_t>(g_->order()); }

  CutProfile analyze(std::span<const Vertex> removed) {
    for (Vertex v : removed) removed_[v] = 1;
    std::fill(seen_.begin(), seen_.end(), 0);
    CutProfile p;
    p.survivors = order() - static_cast<std::uint32_t>(removed.size());
    p.min_degree = p.survivors ? ~std::uint32_t{0} : 0;
    for (Vertex s = 0; s < order(); ++s) {
      if (removed_[s] || seen_[s]) continue;
      queue_.assign(1, s);
      seen_[s] = 1;
      std::uint32_t degree_sum = 0;
      for (std::size_t head = 0; head < queue_.size(); ++head) {
        std::uint32_t d = 0;
        for (Vertex w : g_->neighbors(queue_[head])) {
          if (removed_[w]) continue;
          ++d;
          if (!seen_[w]) {
            seen_[w] = 1;
            queue_.push_back(w);
          }
        }
        degree_sum += d;
        p.min_degree = std::min(p.min_degree, d);
      }
      const auto size = static_cast<std::uint32_t>(queue_.size());
      ++p.components;
      if (degree_sum / 2 >= size) ++p.cyclic_components;
      p.largest = std::max(p.largest, size);
    }
    for (Vertex v : removed) removed_[v] = 0;
    return p;
  }

  std::uint32_t neighborhood_size(std::span<const Vertex> s) {
    std::vector<Vertex> out;
    neighborhood(s, out);
    return static_cast<std::uint32_t>(out.size());
  }

  void neighborhood(std::span<const Vertex> s, std::vector<Vertex>& out) {
    out.clear();
    for (Vertex v : s) mark_[v] = 2;
    for (Vertex v : s) {
      for (Vertex w : g_->neighbors(v)) {
        if (!mark_[w]) {
          mark_[w] = 1;
          out.push_back(w);
        }
      }
    }
    for (Vertex v : s) mark_[v] = 0;
    for (Vertex w : out) mark_[w] = 0;
    std::sort(out.begin(), out.end());
  }

 private:
  const Graph* g_;
  std::vector<std::uint8_t> removed_;
  std::vector<std::uint8_t> seen_;
  std::vector<std::uint8_t> mark_;
  std::vector<Vertex> queue_;
};

/// Calls fn(make_analyzer) with a factory for the fastest analyzer that fits
/// the graph. The factory returns a fresh, worker-private analyzer.
template <class Fn>
decltype(auto) with_analyzer(const Graph& g, Fn&& fn) {
  if (g.order() <= 64) {
    return fn([&g] { return MaskAnalyzer<1>(g); });
  }
  if (g.order() <= 128) {
    return fn([&g] { return MaskAnalyzer<2>(g); });
  }
  return fn([&g] { return GenericAnalyzer(g); });
}

}  // namespace cayconn::detail
