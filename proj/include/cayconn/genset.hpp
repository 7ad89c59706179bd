#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cayconn {

/// A transposition (k l) with 1 <= k < l.
struct Transposition {
  int k = 0;
  int l = 0;

  auto operator<=>(const Transposition&) const = default;
  bool operator==(const Transposition&) const = default;

  bool disjoint_from(const Transposition& o) const {
    return k != o.k && k != o.l && l != o.k && l != o.l;
  }
  std::string to_string() const;
};

enum class GenClass { Star, Path, OtherTree, Cycle, UnicyclicTriangleFree, Other };

/// Stable report string ("Star", "Path", ...).
std::string_view to_string(GenClass c);

/// Transposition generating graph on positions [n].
class GeneratingGraph {
 public:
  int n() const { return n_; }
  /// Edges sorted lexicographically, each with k < l.
  const std::vector<Transposition>& edges() const { return edges_; }
  GenClass cls() const { return class_; }

  int degree(int position) const;
  std::vector<int> neighbors(int position) const;
  bool has_edge(int a, int b) const;

  bool is_tree() const {
    return class_ == GenClass::Star || class_ == GenClass::Path || class_ == GenClass::OtherTree;
  }
  bool is_unicyclic() const {
    return class_ == GenClass::Cycle || class_ == GenClass::UnicyclicTriangleFree;
  }

  /// "1-2,2-3,..." in edge order.
  std::string edge_string() const;

  bool operator==(const GeneratingGraph&) const = default;

 private:
  friend GeneratingGraph build_generating_graph(int, std::vector<std::pair<int, int>>, bool);
  int n_ = 0;
  std::vector<Transposition> edges_;
  GenClass class_ = GenClass::Other;
};

/// Validates and classifies. Pairs must lie in [n], be loop-free and not
/// repeat (in either orientation); the graph must be connected. A connected
/// graph with n edges containing a triangle is rejected unless
/// `allow_triangle` is set, in which case it is classified Other.
/// Throws ArgumentError for n < 2 and ValidationError otherwise.
GeneratingGraph build_generating_graph(int n, std::vector<std::pair<int, int>> pairs,
                                       bool allow_triangle = false);

GenClass classify(const GeneratingGraph& g);

/// Position removed by the hierarchical decomposition and its neighbors in
/// the generating graph.
struct PeelChoice {
  int position = 0;
  std::vector<int> anchors;

  bool operator==(const PeelChoice&) const = default;
};

PeelChoice choose_peel(const GeneratingGraph& g);

/// Position relabeling: image[p] for p in 1..n (index 0 unused).
struct PositionMap {
  std::vector<int> image;

  int operator()(int p) const { return image.at(static_cast<std::size_t>(p)); }
  bool is_identity() const;
};

/// Returns an isomorphic generating graph whose peel position is n.
std::pair<GeneratingGraph, PositionMap> relabel_to_canonical(const GeneratingGraph& g);

/// Length of the unique cycle of a unicyclic generating graph, 0 for trees,
/// or the girth for other graphs.
int generator_girth(const GeneratingGraph& g);

}  // namespace cayconn
