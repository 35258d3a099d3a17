#ifndef GALG_GRAPH_ALGORITHMS_HPP
#define GALG_GRAPH_ALGORITHMS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "galg/limits.hpp"
#include "galg/multigraph.hpp"

namespace galg {

/// Number of edges with exactly one endpoint in `subset` (D_I).
/// Throws InvalidInput for an empty subset or labels outside the graph.
int cut_size(const Multigraph& g, VertexSubset subset);

/// True iff the edges of `subset` contain no cycle; a parallel pair is a
/// 2-cycle.
bool is_forest(const Multigraph& g, EdgeSubset subset);

/// True iff the spanning subgraph with edge set `keep` connects every vertex.
bool spans_connected(const Multigraph& g, EdgeSubset keep);

/// Number of edges e outside the forest that close a cycle with the forest
/// in which e is the smallest edge (edge-list order). Throws InvalidInput if
/// `forest` is not acyclic.
int external_activity(const Multigraph& g, EdgeSubset forest);

/// Bivariate polynomial with nonnegative integer coefficients.
class TuttePolynomial {
 public:
  using Exponents = std::pair<int, int>;

  TuttePolynomial() = default;
  static TuttePolynomial one();

  std::uint64_t coefficient(int i, int j) const;
  const std::map<Exponents, std::uint64_t>& terms() const { return terms_; }
  std::uint64_t evaluate(std::uint64_t x, std::uint64_t y) const;

  TuttePolynomial& operator+=(const TuttePolynomial& o);
  /// Multiplies by x^i y^j.
  TuttePolynomial shifted(int i, int j) const;

  /// e.g. "x^2 + x + y".
  std::string to_string() const;

  friend bool operator==(const TuttePolynomial&, const TuttePolynomial&) = default;
  friend auto operator<=>(const TuttePolynomial& a, const TuttePolynomial& b) {
    return a.terms_ <=> b.terms_;
  }

 private:
  std::map<Exponents, std::uint64_t> terms_;
};

/// Tutte polynomial by deletion-contraction.
TuttePolynomial tutte(const Multigraph& g);

/// Determinant of a principal minor of the Laplacian; 0 when disconnected.
std::uint64_t count_trees_matrixtree(const Multigraph& g);

/// Edges lying on no cycle. A parallel edge is never a bridge.
EdgeSubset bridges(const Multigraph& g);

struct DeltaSubgraph {
  /// Non-bridge edges on their incident vertices, relabeled 0..k-1 in
  /// increasing order of the original labels.
  Multigraph graph;
  /// Original label of each vertex of `graph`.
  std::vector<int> vertex_map;
  /// Original index of each edge of `graph`.
  std::vector<std::size_t> edge_map;
};

/// Throws InvalidInput for a disconnected graph.
DeltaSubgraph delta_subgraph(const Multigraph& g);

/// True iff the complement of `subset` is a connected spanning subgraph.
/// Throws InvalidInput("tree algebra requires connected graph") when g is
/// disconnected.
bool is_slim(const Multigraph& g, EdgeSubset subset);

/// Calls `visit` for every acyclic edge subset. Throws BoundExceeded when the
/// graph has more than `edge_bound` edges.
void for_each_forest(const Multigraph& g, const std::function<void(EdgeSubset)>& visit,
                     std::size_t edge_bound = kForestEnumerationEdges);
std::vector<EdgeSubset> enumerate_forests(const Multigraph& g,
                                          std::size_t edge_bound = kForestEnumerationEdges);
/// Spanning trees; empty for a disconnected graph.
std::vector<EdgeSubset> enumerate_trees(const Multigraph& g,
                                        std::size_t edge_bound = kForestEnumerationEdges);

/// Entry k counts forests F with external activity |E| - |F| - k.
std::vector<std::uint64_t> forest_activity_series(
    const Multigraph& g, std::size_t edge_bound = kForestEnumerationEdges);
/// Entry k counts spanning trees T with external activity |E| - n - k, where
/// n + 1 is the number of vertices. Empty for a disconnected graph.
std::vector<std::uint64_t> tree_activity_series(
    const Multigraph& g, std::size_t edge_bound = kForestEnumerationEdges);

/// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexSubset> connected_components(const Multigraph& g);

/// Induced subgraph on `vertices`, relabeled in increasing label order.
Multigraph induced_subgraph(const Multigraph& g, VertexSubset vertices);

}  // namespace galg

#endif  // GALG_GRAPH_ALGORITHMS_HPP
