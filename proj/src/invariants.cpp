#include "galg/invariants.hpp"

#include <algorithm>
#include <string>

#include "galg/errors.hpp"
#include "galg/generators.hpp"

namespace galg {

namespace {

const char* const kInconsistent = "not a consistent vertex-generator family";

[[noreturn]] void inconsistent(const std::string& detail) {
  throw InvalidInput(std::string(kInconsistent) + ": " + detail);
}

// (d(a) + d(b) - d(a + b)) / 2, or -1 when the numerator is odd or negative.
int pair_count(const AlgebraElement& a, const AlgebraElement& b) {
  const auto da = static_cast<long>(degree_d(a));
  const auto db = static_cast<long>(degree_d(b));
  const auto dab = static_cast<long>(degree_d(a + b));
  const long num = da + db - dab;
  if (num < 0 || num % 2 != 0) return -1;
  return static_cast<int>(num / 2);
}

}  // namespace

std::size_t degree_d(const AlgebraElement& r) {
  if (r.constant_term() != 0) throw InvalidInput("not nilpotent");
  return r.support_degree1().size();
}

int multiplicity(const Multigraph& g, int i, int j) {
  if (i == j) throw InvalidInput("multiplicity needs two distinct vertices");
  const AmbientPtr amb = Ambient::full(g);
  const int m = pair_count(gen_Y_tilde(amb, i), gen_Y_tilde(amb, j));
  if (m < 0) throw Error("internal inconsistency: odd degree difference");
  return m;
}

std::size_t incident_edge_count(std::span<const AlgebraElement> gens, std::span<const std::size_t> subset,
                                std::span<const Rational> coeffs) {
  if (subset.size() != coeffs.size()) throw InvalidInput("need one coefficient per chosen generator");
  if (subset.empty()) throw InvalidInput("empty generator subset");
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) throw InvalidInput("coefficients must be nonzero");
    for (std::size_t l = 0; l < k; ++l) {
      if (coeffs[l] == coeffs[k]) throw InvalidInput("coefficients must be pairwise distinct");
    }
    if (subset[k] >= gens.size()) throw InvalidInput("generator index out of range");
  }
  AlgebraElement sum = AlgebraElement::zero(gens[subset.front()].ambient());
  for (std::size_t k = 0; k < subset.size(); ++k) sum += gens[subset[k]] * coeffs[k];
  return degree_d(sum);
}

Multigraph reconstruct(std::span<const AlgebraElement> gens) {
  if (gens.empty()) inconsistent("empty family");
  const AmbientPtr& amb = gens.front().ambient();
  if (amb->kind() != AmbientKind::full) inconsistent("elements must live in the full square-free algebra");
  if (gens.size() > kMaxVertices) inconsistent("too many generators");
  std::vector<std::size_t> degree(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].ambient()->same_as(*amb)) inconsistent("elements live in different algebras");
    if (gens[i].constant_term() != 0) inconsistent("generator " + std::to_string(i) + " is not nilpotent");
    if (gens[i].is_zero()) inconsistent("generator " + std::to_string(i) + " is zero (isolated vertex)");
    degree[i] = degree_d(gens[i]);
  }

  std::vector<Edge> edges;
  std::vector<std::size_t> incident(gens.size(), 0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const int m = pair_count(gens[i], gens[j]);
      if (m < 0) inconsistent("odd or negative edge count between " + std::to_string(i) + " and " + std::to_string(j));
      for (int k = 0; k < m; ++k) edges.push_back({static_cast<int>(i), static_cast<int>(j)});
      incident[i] += static_cast<std::size_t>(m);
      incident[j] += static_cast<std::size_t>(m);
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (incident[i] != degree[i]) {
      inconsistent("vertex " + std::to_string(i) + " has degree " + std::to_string(degree[i]) +
                   " but " + std::to_string(incident[i]) + " recovered edges");
    }
  }

  AlgebraElement log_sum = AlgebraElement::zero(amb);
  for (const auto& z : gens) log_sum += log_one_plus(z);
  if (!log_sum.is_zero()) inconsistent("sum of log(1 + Z_i) is not zero");

  if (edges.size() > kMaxEdges) inconsistent("too many edges");
  return Multigraph(static_cast<int>(gens.size()), std::move(edges));
}

}  // namespace galg
