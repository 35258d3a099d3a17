#ifndef GALG_SEARCH_HPP
#define GALG_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galg/graph_algorithms.hpp"
#include "galg/hilbert.hpp"
#include "galg/multigraph.hpp"

namespace galg {

enum class SearchMode { forest, tree };

struct SearchOptions {
  int vertices = 4;
  int edges = 6;
  SearchMode mode = SearchMode::forest;
  /// Also compute generic series (cost grows with the seed count).
  bool generic = false;
  std::vector<std::uint64_t> seeds{1, 2, 3};
  int vertex_bound = 6;
  int edge_bound = 8;
  /// Worker threads; 0 means one per hardware thread.
  unsigned threads = 0;
};

/// Series of one enumerated graph. In tree mode the graded and filtered
/// series are those of the tree-quotient algebras.
struct GraphSeries {
  Multigraph graph;
  /// Tutte polynomial of the graph (forest mode) or of its Delta-subgraph
  /// (tree mode).
  TuttePolynomial group_key;
  HilbertSeries graded;
  HilbertSeries filtered;
  std::optional<HilbertSeries> generic;
  std::optional<bool> generic_consensus;
};

struct SeriesRelation {
  std::string lhs;
  std::string rhs;
  Majorization relation;
};

/// Two non-isomorphic graphs of one group with equal graded and different
/// filtered series.
struct SearchPair {
  std::size_t first;   // index into SearchResult::graphs
  std::size_t second;
  std::vector<SeriesRelation> relations;
};

struct SearchResult {
  SearchOptions options;
  std::size_t graphs_enumerated = 0;
  /// Groups of two or more graphs sharing a key.
  std::size_t shared_groups = 0;
  /// Only graphs belonging to such groups, in enumeration order.
  std::vector<GraphSeries> graphs;
  std::vector<SearchPair> pairs;
};

/// Enumerates graphs with exactly `vertices` vertices and `edges` edges up to
/// isomorphism (connected ones only in tree mode), groups them by key and
/// reports every separated pair. Deterministic for fixed options. Throws
/// BoundExceeded above the configured bounds.
SearchResult run_search(const SearchOptions& options);

/// Named series of a pair, in the order graded, filtered_a, filtered_b and,
/// when present, generic_a, generic_b.
std::vector<std::pair<std::string, HilbertSeries>> pair_series(const SearchResult& result,
                                                               const SearchPair& pair);

}  // namespace galg

#endif  // GALG_SEARCH_HPP
