#ifndef GALG_ISOMORPHISM_HPP
#define GALG_ISOMORPHISM_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "galg/limits.hpp"
#include "galg/multigraph.hpp"

namespace galg {

/// A multiplicity-preserving bijection `map[v1] = v2`, if one exists.
/// Backtracking over vertex assignments, pruned by degree.
/// Throws BoundExceeded when either graph has more than `vertex_bound`
/// vertices.
std::optional<std::vector<int>> are_isomorphic(const Multigraph& g1, const Multigraph& g2,
                                               std::size_t vertex_bound = kIsomorphismVertices);

/// Canonical representative of the isomorphism class: the relabeling with
/// the lexicographically smallest multiplicity vector among those that sort
/// vertices by non-increasing degree. Edges come out sorted.
Multigraph canonical_form(const Multigraph& g);

/// All loopless multigraphs with exactly `vertex_count` vertices and
/// `edge_count` edges, one per isomorphism class, as canonical forms in
/// increasing order of their multiplicity vectors.
std::vector<Multigraph> enumerate_multigraphs(int vertex_count, int edge_count,
                                              bool connected_only = false);

}  // namespace galg

#endif  // GALG_ISOMORPHISM_HPP
