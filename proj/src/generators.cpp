#include "galg/generators.hpp"

#include <string>

#include "galg/errors.hpp"

namespace galg {

namespace {

void require_vertex(const Multigraph& g, int vertex) {
  if (vertex < 0 || vertex >= g.vertex_count()) {
    throw InvalidInput("vertex " + std::to_string(vertex) + " out of range");
  }
}

void require_nilpotent(const AlgebraElement& a) {
  if (a.constant_term() != 0) throw InvalidInput("element has a nonzero constant term");
}

template <class Make>
std::vector<AlgebraElement> per_vertex(const AmbientPtr& ambient, Make make) {
  std::vector<AlgebraElement> out;
  for (int i = 0; i < ambient->graph().vertex_count(); ++i) out.push_back(make(ambient, i));
  return out;
}

}  // namespace

int coeff_c(const Multigraph& g, int vertex, std::size_t e) {
  require_vertex(g, vertex);
  const Edge& edge = g.edge(e);
  if (edge.u != vertex && edge.v != vertex) return 0;
  const int other = edge.u == vertex ? edge.v : edge.u;
  return vertex < other ? 1 : -1;
}

AlgebraElement gen_X(const AmbientPtr& ambient, int vertex) {
  const Multigraph& g = ambient->graph();
  require_vertex(g, vertex);
  std::vector<AlgebraElement::Term> terms;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (int c = coeff_c(g, vertex, e); c != 0) terms.emplace_back(EdgeSubset::singleton(e), c);
  }
  return AlgebraElement::from_terms(ambient, std::move(terms));
}

AlgebraElement gen_Y(const AmbientPtr& ambient, int vertex) {
  const Multigraph& g = ambient->graph();
  require_vertex(g, vertex);
  AlgebraElement y = AlgebraElement::one(ambient);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (int c = coeff_c(g, vertex, e); c != 0) {
      y = y * (AlgebraElement::one(ambient) + phi(ambient, e) * Rational(c));
    }
  }
  return y;
}

AlgebraElement gen_Y_tilde(const AmbientPtr& ambient, int vertex) {
  return gen_Y(ambient, vertex) - AlgebraElement::one(ambient);
}

AlgebraElement gen_f(const AmbientPtr& ambient, int vertex, const UniPoly& f) {
  if (!f.has_zero_constant_term()) throw InvalidInput("f must have zero constant term");
  return evaluate(f.truncated(ambient->edge_count()), gen_X(ambient, vertex));
}

std::vector<AlgebraElement> x_generators(const AmbientPtr& ambient) {
  return per_vertex(ambient, gen_X);
}

std::vector<AlgebraElement> y_generators(const AmbientPtr& ambient) {
  return per_vertex(ambient, gen_Y);
}

std::vector<AlgebraElement> y_tilde_generators(const AmbientPtr& ambient) {
  return per_vertex(ambient, gen_Y_tilde);
}

std::vector<AlgebraElement> f_generators(const AmbientPtr& ambient, const UniPoly& f) {
  if (!f.has_zero_constant_term()) throw InvalidInput("f must have zero constant term");
  const UniPoly g = f.truncated(ambient->edge_count());
  std::vector<AlgebraElement> out;
  for (int i = 0; i < ambient->graph().vertex_count(); ++i) {
    out.push_back(evaluate(g, gen_X(ambient, i)));
  }
  return out;
}

AlgebraElement evaluate(const UniPoly& f, const AlgebraElement& a) {
  const auto& c = f.coefficients();
  AlgebraElement result = AlgebraElement::zero(a.ambient());
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    result = result * a + AlgebraElement::constant(a.ambient(), *it);
  }
  return result;
}

AlgebraElement exp_nilpotent(const AlgebraElement& a) {
  require_nilpotent(a);
  return evaluate(UniPoly::exp_minus_one(a.ambient()->edge_count()), a) +
         AlgebraElement::one(a.ambient());
}

AlgebraElement log_one_plus(const AlgebraElement& a) {
  require_nilpotent(a);
  return evaluate(UniPoly::log_one_plus(a.ambient()->edge_count()), a);
}

}  // namespace galg
