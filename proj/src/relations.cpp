#include "galg/relations.hpp"

#include <algorithm>

#include "galg/errors.hpp"
#include "galg/generators.hpp"
#include "galg/graph_algorithms.hpp"
#include "galg/squarefree.hpp"

namespace galg {

namespace {

void require_subset_bound(const Multigraph& g, std::size_t bound) {
  if (static_cast<std::size_t>(g.vertex_count()) > bound) {
    throw BoundExceeded("relation checks enumerate vertex subsets and are limited to " +
                        std::to_string(bound) + " vertices");
  }
  require_rank_bound(g.edge_count());
}

AlgebraElement subset_sum(const std::vector<AlgebraElement>& xs, VertexSubset s, const AmbientPtr& amb) {
  AlgebraElement sum = AlgebraElement::zero(amb);
  for (std::size_t i : s.members()) sum += xs[i];
  return sum;
}

AlgebraElement subset_product_minus_one(const std::vector<AlgebraElement>& ys, VertexSubset s,
                                        const AmbientPtr& amb) {
  AlgebraElement prod = AlgebraElement::one(amb);
  for (std::size_t i : s.members()) prod = prod * ys[i];
  return prod - AlgebraElement::one(amb);
}

RelationEntry evaluate_power(const AlgebraElement& base, VertexSubset s, int exponent) {
  RelationEntry entry;
  entry.subset = s;
  entry.exponent = exponent;
  const AlgebraElement below = base.pow(static_cast<std::size_t>(std::max(exponent - 1, 0)));
  entry.sharp = exponent == 0 || !below.is_zero();
  entry.vanishes = exponent == 0 ? false : (below * base).is_zero();
  return entry;
}

}  // namespace

bool RelationReport::all_vanish() const {
  return std::all_of(entries.begin(), entries.end(), [](const RelationEntry& e) { return e.vanishes; });
}

bool RelationReport::singletons_sharp() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const RelationEntry& e) { return e.subset.size() != 1 || e.sharp; });
}

RelationReport check_pI(const Multigraph& g, std::size_t vertex_bound) {
  require_subset_bound(g, vertex_bound);
  const AmbientPtr amb = Ambient::full(g);
  const auto xs = x_generators(amb);
  RelationReport report{"p_I", {}};
  const std::uint64_t limit = g.all_vertices().bits;
  for (std::uint64_t bits = 1; bits <= limit; ++bits) {
    const VertexSubset s{bits};
    report.entries.push_back(evaluate_power(subset_sum(xs, s, amb), s, cut_size(g, s) + 1));
  }
  return report;
}

RelationReport check_qI(const Multigraph& g, std::size_t vertex_bound) {
  require_subset_bound(g, vertex_bound);
  const AmbientPtr amb = Ambient::full(g);
  const auto ys = y_generators(amb);
  RelationReport report{"q_I", {}};
  const std::uint64_t limit = g.all_vertices().bits;
  for (std::uint64_t bits = 1; bits <= limit; ++bits) {
    const VertexSubset s{bits};
    report.entries.push_back(evaluate_power(subset_product_minus_one(ys, s, amb), s, cut_size(g, s) + 1));
  }
  return report;
}

std::vector<RelationReport> check_tree_relations(const Multigraph& g, std::size_t vertex_bound) {
  if (!g.is_connected()) throw InvalidInput("tree algebra requires connected graph");
  require_subset_bound(g, vertex_bound);
  const AmbientPtr amb = Ambient::tree(g);
  const auto xs = x_generators(amb);
  const auto ys = y_generators(amb);
  RelationReport p{"p_I^T", {}};
  RelationReport q{"q_I^T", {}};
  const std::uint64_t all = g.all_vertices().bits;
  for (std::uint64_t bits = 1; bits < all; ++bits) {
    const VertexSubset s{bits};
    const int d = cut_size(g, s);
    p.entries.push_back(evaluate_power(subset_sum(xs, s, amb), s, d));
    q.entries.push_back(evaluate_power(subset_product_minus_one(ys, s, amb), s, d));
  }
  RelationReport full{"q_full^T", {}};
  full.entries.push_back(evaluate_power(subset_product_minus_one(ys, VertexSubset{all}, amb), VertexSubset{all}, 1));
  return {std::move(p), std::move(q), std::move(full)};
}

}  // namespace galg
