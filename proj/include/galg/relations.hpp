#ifndef GALG_RELATIONS_HPP
#define GALG_RELATIONS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "galg/limits.hpp"
#include "galg/multigraph.hpp"

namespace galg {

/// Outcome of evaluating one relation (base)^exponent on a vertex subset.
struct RelationEntry {
  VertexSubset subset;
  int exponent = 0;
  /// base^exponent == 0 in the ambient algebra.
  bool vanishes = false;
  /// base^(exponent - 1) != 0, i.e. the exponent cannot be lowered.
  bool sharp = false;
};

struct RelationReport {
  /// "p_I", "q_I", "p_I^T", "q_I^T" or "q_full^T".
  std::string family;
  std::vector<RelationEntry> entries;

  bool all_vanish() const;
  /// Every singleton entry is sharp.
  bool singletons_sharp() const;
};

/// (sum_{i in I} X_i)^(D_I + 1) in the square-free algebra, for every
/// nonempty I of {0..n}. Throws BoundExceeded above `vertex_bound` vertices.
RelationReport check_pI(const Multigraph& g, std::size_t vertex_bound = kRelationSubsetVertices);

/// (prod_{i in I} Y_i - 1)^(D_I + 1), for every nonempty I of {0..n}.
RelationReport check_qI(const Multigraph& g, std::size_t vertex_bound = kRelationSubsetVertices);

/// Tree-quotient relations: (sum X_i^T)^(D_I) and (prod Y_i^T - 1)^(D_I)
/// for nonempty proper I, plus prod_i Y_i^T = 1 (reported as a single entry
/// with exponent 1). Throws InvalidInput for a disconnected graph.
std::vector<RelationReport> check_tree_relations(
    const Multigraph& g, std::size_t vertex_bound = kRelationSubsetVertices);

}  // namespace galg

#endif  // GALG_RELATIONS_HPP
