#ifndef GALG_LIMITS_HPP
#define GALG_LIMITS_HPP

#include <cstddef>

namespace galg {

// Default bounds for the exponential parts of the library. Each operation
// takes its bound as an argument so callers can override it.
inline constexpr std::size_t kForestEnumerationEdges = 24;
inline constexpr std::size_t kIsomorphismVertices = 10;
inline constexpr std::size_t kRelationSubsetVertices = 12;
inline constexpr std::size_t kDefaultRankEdges = 20;

/// Edge bound for rank computations (Hilbert series, relation checks).
/// Reads GALG_MAX_EDGES from the environment once; falls back to
/// kDefaultRankEdges. Never exceeds 63, the width of an edge bitmask.
std::size_t rank_edge_bound();

/// Throws BoundExceeded when a graph with `edges` edges is too large for
/// exact rank computations.
void require_rank_bound(std::size_t edges);

}  // namespace galg

#endif  // GALG_LIMITS_HPP
