#include "galg/commands.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "galg/errors.hpp"
#include "galg/generators.hpp"
#include "galg/graph_algorithms.hpp"
#include "galg/invariants.hpp"
#include "galg/isomorphism.hpp"
#include "galg/squarefree.hpp"
#include "galg/unipoly.hpp"

namespace galg {

using nlohmann::json;

namespace {

json subset_json(VertexSubset s) {
  json out = json::array();
  for (std::size_t v : s.members()) out.push_back(v);
  return out;
}

json check_entry(const std::string& name, bool passed, json detail = json::object()) {
  detail["name"] = name;
  detail["passed"] = passed;
  return detail;
}

std::string mode_name(SearchMode m) { return m == SearchMode::forest ? "forest" : "tree"; }

}  // namespace

json to_json(const Multigraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

json to_json(const SeriesResult& r) {
  json out{{"series", r.series.coefficients()},
           {"total", r.series.total()},
           {"plateau_k", r.plateau_k},
           {"dimensions", r.dimensions}};
  if (r.consensus) out["consensus"] = *r.consensus;
  return out;
}

json to_json(const RelationReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"I", subset_json(e.subset)},
                       {"exponent", e.exponent},
                       {"vanishes", e.vanishes},
                       {"sharp", e.sharp}});
  }
  return {{"family", r.family}, {"entries", entries}};
}

json to_json(const SearchResult& r) {
  json graphs = json::array();
  for (const auto& gs : r.graphs) {
    json g = to_json(gs.graph);
    g["tutte"] = gs.group_key.to_string();
    g["graded"] = gs.graded.coefficients();
    g["filtered"] = gs.filtered.coefficients();
    if (gs.generic) {
      g["generic"] = gs.generic->coefficients();
      g["generic_consensus"] = *gs.generic_consensus;
    }
    graphs.push_back(std::move(g));
  }
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    json rel = json::array();
    for (const auto& s : p.relations) {
      rel.push_back({{"lhs", s.lhs}, {"rhs", s.rhs}, {"relation", to_string(s.relation)}});
    }
    const auto& a = r.graphs[p.first];
    const auto& b = r.graphs[p.second];
    json pj{{"graph_a", p.first},
            {"graph_b", p.second},
            {"graded", a.graded.coefficients()},
            {"filtered_a", a.filtered.coefficients()},
            {"filtered_b", b.filtered.coefficients()},
            {"isomorphic", false},
            {"relations", rel}};
    if (a.generic && b.generic) {
      pj["generic_a"] = a.generic->coefficients();
      pj["generic_b"] = b.generic->coefficients();
    }
    pairs.push_back(std::move(pj));
  }
  return {{"mode", mode_name(r.options.mode)},
          {"vertices", r.options.vertices},
          {"edges", r.options.edges},
          {"graphs_enumerated", r.graphs_enumerated},
          {"shared_groups", r.shared_groups},
          {"graphs", graphs},
          {"pairs", pairs}};
}

CommandOutput cmd_series(const Multigraph& g, const std::string& algebra) {
  CommandOutput out;
  SeriesResult r;
  bool tree = false;
  json extra = json::object();
  if (algebra == "C") {
    r = graded_series(x_generators(Ambient::full(g)));
  } else if (algebra == "K") {
    r = filtered_series(y_generators(Ambient::full(g)));
  } else if (algebra == "CT") {
    tree = true;
    r = graded_series(x_generators(Ambient::tree(g)));
  } else if (algebra == "KT") {
    tree = true;
    r = filtered_series(y_generators(Ambient::tree(g)));
  } else if (algebra == "generic") {
    r = generic_series(Ambient::full(g), kDefaultGenericSeeds);
  } else if (algebra.starts_with("f:")) {
    const UniPoly f = read_unipoly_file(algebra.substr(2));
    if (!f.has_zero_constant_term()) throw InvalidInput("f must have zero constant term");
    extra["f"] = f.to_string();
    r = filtered_series(f_generators(Ambient::full(g), f));
  } else {
    throw InvalidInput("unknown algebra '" + algebra + "' (expected C, K, CT, KT, generic or f:<file>)");
  }
  out.json = to_json(r);
  out.json["algebra"] = algebra;
  out.json.update(extra);
  std::ostringstream s;
  s << algebra << ": " << r.series.to_string() << " (total " << r.series.total();
  if (tree) {
    const auto trees = count_trees_matrixtree(g);
    out.json["trees"] = trees;
    s << ", spanning trees " << trees;
  } else {
    const auto forests = tutte(g).evaluate(2, 1);
    out.json["forests"] = forests;
    s << ", forests " << forests;
  }
  s << ")\n";
  out.summary = s.str();
  return out;
}

CommandOutput cmd_check(const Multigraph& g) {
  CommandOutput out;
  json checks = json::array();
  bool all_pass = true;
  std::ostringstream s;
  auto record = [&](json entry) {
    const bool passed = entry["passed"].get<bool>();
    all_pass = all_pass && passed;
    s << (passed ? "PASS " : "FAIL ") << entry["name"].get<std::string>() << '\n';
    checks.push_back(std::move(entry));
  };

  const RelationReport p = check_pI(g);
  record(check_entry("p_I relations", p.all_vanish() && p.singletons_sharp(), {{"report", to_json(p)}}));
  const RelationReport q = check_qI(g);
  record(check_entry("q_I relations", q.all_vanish() && q.singletons_sharp(), {{"report", to_json(q)}}));

  const AmbientPtr full = Ambient::full(g);
  const SeriesResult graded = graded_series(x_generators(full));
  const auto activity = forest_activity_series(g);
  const auto forests = tutte(g).evaluate(2, 1);
  record(check_entry("forest external activity",
                     graded.series == HilbertSeries(activity) && graded.series.total() == forests,
                     {{"graded", graded.series.coefficients()}, {"activity", activity}, {"forests", forests}}));
  const SeriesResult filtered = filtered_series(y_generators(full));
  record(check_entry("subalgebra coincidence", filtered.series.total() == graded.series.total(),
                     {{"filtered", filtered.series.coefficients()}}));

  if (g.has_isolated_vertex()) {
    out.json["reconstruction_skipped"] = "graph has an isolated vertex";
    s << "SKIP reconstruction round-trip (isolated vertex)\n";
  } else {
    const Multigraph rebuilt = reconstruct(y_tilde_generators(full));
    record(check_entry("reconstruction round-trip", are_isomorphic(g, rebuilt).has_value(),
                       {{"reconstructed", to_json(rebuilt)}}));
  }

  if (g.is_connected()) {
    for (const RelationReport& r : check_tree_relations(g)) {
      record(check_entry(r.family + " relations", r.all_vanish(), {{"report", to_json(r)}}));
    }
    const SeriesResult tree_graded = graded_series(x_generators(Ambient::tree(g)));
    const auto tree_activity = tree_activity_series(g);
    const auto trees = count_trees_matrixtree(g);
    record(check_entry("tree external activity",
                       tree_graded.series == HilbertSeries(tree_activity) && tree_graded.series.total() == trees,
                       {{"graded", tree_graded.series.coefficients()},
                        {"activity", tree_activity},
                        {"trees", trees}}));
  } else {
    out.json["tree_checks_skipped"] = "graph is disconnected";
    s << "SKIP tree checks (graph is disconnected)\n";
  }
  out.json["graph"] = to_json(g);
  out.json["checks"] = checks;
  out.json["passed"] = all_pass;
  out.exit_code = all_pass ? kExitOk : kExitCheckFailed;
  out.summary = s.str();
  return out;
}

CommandOutput cmd_search(const SearchOptions& options) {
  CommandOutput out;
  const SearchResult r = run_search(options);
  out.json = to_json(r);
  std::ostringstream s;
  s << r.graphs_enumerated << " graphs, " << r.shared_groups << " shared groups, " << r.pairs.size()
    << " separated pairs\n";
  for (const auto& p : r.pairs) {
    s << "pair " << p.first << " / " << p.second << '\n';
    for (const auto& [name, series] : pair_series(r, p)) s << "  " << name << ": " << series.to_string() << '\n';
  }
  out.summary = s.str();
  return out;
}

CommandOutput cmd_tutte(const Multigraph& g) {
  CommandOutput out;
  const TuttePolynomial t = tutte(g);
  json terms = json::array();
  for (const auto& [exps, c] : t.terms()) terms.push_back({{"x", exps.first}, {"y", exps.second}, {"c", c}});
  out.json = {{"tutte", t.to_string()},
              {"terms", terms},
              {"forests", t.evaluate(2, 1)},
              {"spanning_trees", g.is_connected() ? t.evaluate(1, 1) : 0}};
  out.summary = "T(x,y) = " + t.to_string() + "\n";
  return out;
}

CommandOutput cmd_reconstruct(const Multigraph& g, unsigned long seed) {
  CommandOutput out;
  if (g.has_isolated_vertex()) throw InvalidInput("reconstruction needs a graph without isolated vertices");
  const auto gens = y_tilde_generators(Ambient::full(g));
  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  std::vector<AlgebraElement> family;
  for (std::size_t i : order) family.push_back(gens[i]);
  const Multigraph rebuilt = reconstruct(family);
  const auto iso = are_isomorphic(g, rebuilt);
  out.json = {{"input", to_json(g)},
              {"generator_order", order},
              {"reconstructed", to_json(rebuilt)},
              {"isomorphic", iso.has_value()}};
  if (iso) out.json["vertex_map"] = *iso;
  out.exit_code = iso ? kExitOk : kExitCheckFailed;
  out.summary = iso ? "reconstructed graph is isomorphic to the input\n"
                    : "reconstructed graph differs from the input\n";
  return out;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const BoundExceeded*>(&e)) return kExitBound;
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidInput*>(&e)) return kExitUsage;
  return kExitCheckFailed;
}

}  // namespace galg
