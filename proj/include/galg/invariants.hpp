#ifndef GALG_INVARIANTS_HPP
#define GALG_INVARIANTS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "galg/multigraph.hpp"
#include "galg/rational.hpp"
#include "galg/squarefree.hpp"

namespace galg {

/// Degree invariant of a nilpotent element of the filtered subalgebra: the
/// number of edges whose monomial phi_e appears with nonzero coefficient.
/// Throws InvalidInput("not nilpotent") on a nonzero constant term.
std::size_t degree_d(const AlgebraElement& r);

/// Number of edges between i and j, recovered from the elements Y~_i and
/// Y~_j alone. Throws InvalidInput when i == j.
int multiplicity(const Multigraph& g, int i, int j);

/// degree_d(sum_k coeffs[k] * gens[subset[k]]): the number of edges
/// incident to the chosen vertices when `gens` is a Y~ family. Throws
/// InvalidInput unless the coefficients are nonzero, pairwise distinct and
/// as many as the subset.
std::size_t incident_edge_count(std::span<const AlgebraElement> gens,
                                std::span<const std::size_t> subset,
                                std::span<const Rational> coeffs);

/// Rebuilds a multigraph from a family claimed to be the Y~ generators of a
/// graph without isolated vertices, using only degree_d evaluations. Vertex
/// k of the result corresponds to gens[k]. Throws InvalidInput("not a
/// consistent vertex-generator family") when the family fails validation.
Multigraph reconstruct(std::span<const AlgebraElement> gens);

}  // namespace galg

#endif  // GALG_INVARIANTS_HPP
