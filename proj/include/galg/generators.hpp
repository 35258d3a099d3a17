#ifndef GALG_GENERATORS_HPP
#define GALG_GENERATORS_HPP

#include <cstddef>
#include <vector>

#include "galg/multigraph.hpp"
#include "galg/squarefree.hpp"
#include "galg/unipoly.hpp"

namespace galg {

/// Incidence sign of edge e at vertex i: +1 when e joins i to a larger
/// label, -1 when to a smaller one, 0 when e does not touch i.
int coeff_c(const Multigraph& g, int vertex, std::size_t e);

/// X_i = sum_e c(i,e) phi_e. Zero for an isolated vertex.
AlgebraElement gen_X(const AmbientPtr& ambient, int vertex);
/// Y_i = prod_e (1 + c(i,e) phi_e) = exp(X_i).
AlgebraElement gen_Y(const AmbientPtr& ambient, int vertex);
/// Y_i - 1.
AlgebraElement gen_Y_tilde(const AmbientPtr& ambient, int vertex);
/// f(X_i) for f with zero constant term (f is truncated at degree |E|
/// first). Throws InvalidInput when f has a nonzero constant term.
AlgebraElement gen_f(const AmbientPtr& ambient, int vertex, const UniPoly& f);

// One generator per vertex 0..n.
std::vector<AlgebraElement> x_generators(const AmbientPtr& ambient);
std::vector<AlgebraElement> y_generators(const AmbientPtr& ambient);
std::vector<AlgebraElement> y_tilde_generators(const AmbientPtr& ambient);
std::vector<AlgebraElement> f_generators(const AmbientPtr& ambient, const UniPoly& f);

/// Horner evaluation of f at an element. Exact for any element; for a
/// nilpotent argument terms beyond its nilpotency order vanish.
AlgebraElement evaluate(const UniPoly& f, const AlgebraElement& a);

/// exp(a) and log(1 + a) for an element with zero constant term, as series
/// truncated at degree |E|. Throws InvalidInput on a nonzero constant term.
AlgebraElement exp_nilpotent(const AlgebraElement& a);
AlgebraElement log_one_plus(const AlgebraElement& a);

}  // namespace galg

#endif  // GALG_GENERATORS_HPP
