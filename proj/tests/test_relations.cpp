#include <doctest.h>

#include <random>

#include "galg/errors.hpp"
#include "galg/generators.hpp"
#include "galg/invariants.hpp"
#include "galg/isomorphism.hpp"
#include "galg/relations.hpp"

using namespace galg;

namespace {

const RelationEntry& entry_for(const RelationReport& r, VertexSubset s) {
  for (const auto& e : r.entries) {
    if (e.subset == s) return e;
  }
  FAIL("subset missing from report");
  return r.entries.front();
}

VertexSubset vertices_of(std::initializer_list<std::size_t> vs) {
  VertexSubset s;
  for (auto v : vs) s.insert(v);
  return s;
}

}  // namespace

TEST_CASE("relation families vanish on the triangle") {
  const Multigraph tri = cycle_graph(3);
  const RelationReport p = check_pI(tri);
  CHECK(p.family == "p_I");
  CHECK(p.entries.size() == 7);
  CHECK(p.all_vanish());
  CHECK(p.singletons_sharp());
  const auto& all = entry_for(p, vertices_of({0, 1, 2}));
  CHECK(all.exponent == 1);
  CHECK(all.vanishes);

  const RelationReport q = check_qI(tri);
  CHECK(q.all_vanish());
  CHECK(q.singletons_sharp());

  for (const RelationReport& r : check_tree_relations(tri)) CHECK(r.all_vanish());
}

TEST_CASE("tree relations lower the exponent by one") {
  // On the triangle, X_0^T squared only has the non-slim support {e0, e2}.
  const AmbientPtr tree = Ambient::tree(cycle_graph(3));
  CHECK_FALSE(gen_X(tree, 0).is_zero());
  CHECK(gen_X(tree, 0).pow(2).is_zero());
  // A single edge is a bridge, so phi_0 already vanishes.
  CHECK(gen_X(Ambient::tree(path_graph(2)), 0).is_zero());

  const auto reports = check_tree_relations(cycle_graph(3));
  REQUIRE(reports.size() == 3);
  CHECK(entry_for(reports[0], vertices_of({0})).exponent == 2);
  CHECK_THROWS_WITH(check_tree_relations(Multigraph(3, {{0, 1}})),
                    doctest::Contains("tree algebra requires connected graph"));
}

TEST_CASE("relations hold across small multigraphs") {
  for (int v = 1; v <= 4; ++v) {
    for (int m = 0; m <= 5; ++m) {
      for (const auto& g : enumerate_multigraphs(v, m)) {
        const auto p = check_pI(g);
        const auto q = check_qI(g);
        CHECK(p.all_vanish());
        CHECK(p.singletons_sharp());
        CHECK(q.all_vanish());
        CHECK(q.singletons_sharp());
        if (g.is_connected()) {
          for (const auto& r : check_tree_relations(g)) CHECK(r.all_vanish());
        }
      }
    }
  }
  CHECK_THROWS_AS(check_pI(path_graph(5), 4), BoundExceeded);
}

TEST_CASE("degree invariant") {
  const Multigraph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 1}});
  const AmbientPtr amb = Ambient::full(g);
  for (int i = 0; i < 4; ++i) CHECK(degree_d(gen_Y_tilde(amb, i)) == static_cast<std::size_t>(g.degree(i)));
  CHECK(degree_d(gen_X(amb, 0) + gen_X(amb, 2)) == 4);
  CHECK(degree_d(AlgebraElement::zero(amb)) == 0);
  CHECK_THROWS_WITH(degree_d(gen_Y(amb, 0)), doctest::Contains("not nilpotent"));
}

TEST_CASE("multiplicity and incident edge counts") {
  CHECK(multiplicity(path_graph(2), 0, 1) == 1);
  CHECK(multiplicity(cycle_graph(3), 0, 1) == 1);
  CHECK(multiplicity(Multigraph(2, {{0, 1}, {0, 1}}), 0, 1) == 2);
  CHECK(multiplicity(Multigraph(3, {{0, 1}}), 0, 2) == 0);

  const AmbientPtr tri = Ambient::full(cycle_graph(3));
  const auto gens = y_tilde_generators(tri);
  const std::vector<std::size_t> pair{0, 1};
  const std::vector<Rational> c12{1, 2};
  CHECK(incident_edge_count(gens, pair, c12) == 3);

  const Multigraph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 1}, {0, 3}});
  const auto gg = y_tilde_generators(Ambient::full(g));
  const std::vector<std::size_t> all{0, 1, 2, 3};
  const std::vector<Rational> distinct{1, 2, 3, 5};
  CHECK(incident_edge_count(gg, all, distinct) == 5);

  const auto path = y_tilde_generators(Ambient::full(path_graph(3)));
  const std::vector<std::size_t> first{0};
  const std::vector<Rational> one{1};
  CHECK(incident_edge_count(path, first, one) == 1);

  const std::vector<Rational> repeated{1, 1};
  CHECK_THROWS(incident_edge_count(gens, pair, repeated));
}

TEST_CASE("reconstruction") {
  const AmbientPtr tri = Ambient::full(cycle_graph(3));
  CHECK(are_isomorphic(reconstruct(y_tilde_generators(tri)), cycle_graph(3)).has_value());

  std::mt19937 rng(3);
  for (int v = 2; v <= 4; ++v) {
    for (const auto& g : enumerate_multigraphs(v, 5)) {
      if (g.has_isolated_vertex()) continue;
      auto gens = y_tilde_generators(Ambient::full(g));
      std::shuffle(gens.begin(), gens.end(), rng);
      CHECK(are_isomorphic(reconstruct(gens), g).has_value());
    }
  }

  const AmbientPtr iso = Ambient::full(Multigraph(3, {{0, 1}}));
  CHECK_THROWS_WITH(reconstruct(y_tilde_generators(iso)),
                    doctest::Contains("not a consistent vertex-generator family"));
  // Summing two generators breaks the per-vertex degree totals.
  const AmbientPtr k4 = Ambient::full(complete_graph(4));
  auto bad = y_tilde_generators(k4);
  bad[0] = bad[0] + bad[1];
  CHECK_THROWS_WITH(reconstruct(bad), doctest::Contains("not a consistent vertex-generator family"));
}
