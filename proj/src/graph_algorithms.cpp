#include "galg/graph_algorithms.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "galg/errors.hpp"

namespace galg {

namespace {

/// Union-find without path compression so that unions can be undone in
/// LIFO order.
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(static_cast<std::size_t>(n)), size_(parent_.size(), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  void undo() {
    int b = history_.back();
    history_.pop_back();
    int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

  std::size_t unions() const { return history_.size(); }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

void require_vertex_subset(const Multigraph& g, VertexSubset s) {
  if (s.empty()) throw InvalidInput("empty vertex subset");
  if (!s.is_subset_of(g.all_vertices())) throw InvalidInput("vertex subset outside the graph");
}

void require_edge_subset(const Multigraph& g, EdgeSubset s) {
  if (!s.is_subset_of(g.all_edges())) throw InvalidInput("edge subset outside the graph");
}

void require_connected(const Multigraph& g) {
  if (!g.is_connected()) throw InvalidInput("tree algebra requires connected graph");
}

void require_enumeration_bound(const Multigraph& g, std::size_t bound) {
  if (g.edge_count() > bound) {
    throw BoundExceeded("forest enumeration is limited to " + std::to_string(bound) +
                        " edges; graph has " + std::to_string(g.edge_count()));
  }
}

// Edges as a loop-allowing list over a fixed vertex range, for Tutte.
using WorkEdges = std::vector<std::pair<int, int>>;

bool connected_in(const WorkEdges& edges, int n, int a, int b) {
  RollbackDsu dsu(n);
  for (auto [u, v] : edges) dsu.unite(u, v);
  return dsu.find(a) == dsu.find(b);
}

TuttePolynomial tutte_rec(WorkEdges edges, int n) {
  int loops = 0;
  std::erase_if(edges, [&](const auto& e) {
    if (e.first == e.second) {
      ++loops;
      return true;
    }
    return false;
  });
  if (edges.empty()) return TuttePolynomial::one().shifted(0, loops);

  auto [u, v] = edges.front();
  WorkEdges rest;
  int m = 0;
  for (auto e : edges) {
    if ((e.first == u && e.second == v) || (e.first == v && e.second == u)) {
      ++m;
    } else {
      rest.push_back(e);
    }
  }
  // Contract the whole parallel class: merge v into u.
  WorkEdges contracted = rest;
  for (auto& e : contracted) {
    if (e.first == v) e.first = u;
    if (e.second == v) e.second = u;
  }
  const TuttePolynomial c = tutte_rec(std::move(contracted), n);

  // With C = T(G / class) and D = T(G - class):
  //   bridge class:     T = (x + y + ... + y^(m-1)) C
  //   otherwise:        T = D + (1 + y + ... + y^(m-1)) C
  TuttePolynomial result;
  if (!connected_in(rest, n, u, v)) {
    result += c.shifted(1, 0);
    for (int j = 1; j < m; ++j) result += c.shifted(0, j);
  } else {
    result = tutte_rec(std::move(rest), n);
    for (int j = 0; j < m; ++j) result += c.shifted(0, j);
  }
  return result.shifted(0, loops);
}

// Fraction-free Gaussian elimination.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

int cut_size(const Multigraph& g, VertexSubset subset) {
  require_vertex_subset(g, subset);
  int d = 0;
  for (const Edge& e : g.edges()) {
    if (subset.contains(static_cast<std::size_t>(e.u)) != subset.contains(static_cast<std::size_t>(e.v))) {
      ++d;
    }
  }
  return d;
}

bool is_forest(const Multigraph& g, EdgeSubset subset) {
  require_edge_subset(g, subset);
  RollbackDsu dsu(g.vertex_count());
  for (std::size_t i : subset.members()) {
    if (!dsu.unite(g.edge(i).u, g.edge(i).v)) return false;
  }
  return true;
}

bool spans_connected(const Multigraph& g, EdgeSubset keep) {
  if (g.vertex_count() <= 1) return true;
  RollbackDsu dsu(g.vertex_count());
  for (std::size_t i : keep.members()) dsu.unite(g.edge(i).u, g.edge(i).v);
  return dsu.unions() + 1 == static_cast<std::size_t>(g.vertex_count());
}

int external_activity(const Multigraph& g, EdgeSubset forest) {
  if (!is_forest(g, forest)) throw InvalidInput("edge subset is not a forest");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  // Forest adjacency: (neighbour, edge index).
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(n);
  for (std::size_t i : forest.members()) {
    adj[static_cast<std::size_t>(g.edge(i).u)].push_back({g.edge(i).v, i});
    adj[static_cast<std::size_t>(g.edge(i).v)].push_back({g.edge(i).u, i});
  }
  int active = 0;
  std::vector<std::size_t> via(n);
  std::vector<int> from(n);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (forest.contains(e)) continue;
    const int src = g.edge(e).u;
    const int dst = g.edge(e).v;
    // Tree path from src to dst, if any.
    std::fill(from.begin(), from.end(), -1);
    std::vector<int> stack{src};
    from[static_cast<std::size_t>(src)] = src;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto [y, edge] : adj[static_cast<std::size_t>(x)]) {
        if (from[static_cast<std::size_t>(y)] < 0) {
          from[static_cast<std::size_t>(y)] = x;
          via[static_cast<std::size_t>(y)] = edge;
          stack.push_back(y);
        }
      }
    }
    if (from[static_cast<std::size_t>(dst)] < 0) continue;
    bool minimal = true;
    for (int x = dst; x != src; x = from[static_cast<std::size_t>(x)]) {
      if (via[static_cast<std::size_t>(x)] < e) {
        minimal = false;
        break;
      }
    }
    if (minimal) ++active;
  }
  return active;
}

TuttePolynomial TuttePolynomial::one() {
  TuttePolynomial t;
  t.terms_[{0, 0}] = 1;
  return t;
}

std::uint64_t TuttePolynomial::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? 0 : it->second;
}

std::uint64_t TuttePolynomial::evaluate(std::uint64_t x, std::uint64_t y) const {
  std::uint64_t total = 0;
  for (const auto& [exps, c] : terms_) {
    std::uint64_t term = c;
    for (int k = 0; k < exps.first; ++k) term *= x;
    for (int k = 0; k < exps.second; ++k) term *= y;
    total += term;
  }
  return total;
}

TuttePolynomial& TuttePolynomial::operator+=(const TuttePolynomial& o) {
  for (const auto& [exps, c] : o.terms_) terms_[exps] += c;
  return *this;
}

TuttePolynomial TuttePolynomial::shifted(int i, int j) const {
  TuttePolynomial t;
  for (const auto& [exps, c] : terms_) t.terms_[{exps.first + i, exps.second + j}] = c;
  return t;
}

std::string TuttePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest x-degree first, then highest y-degree.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [i, j] = it->first;
    if (!first) out << " + ";
    first = false;
    bool has_var = i > 0 || j > 0;
    if (it->second != 1 || !has_var) out << it->second;
    if (i > 0) out << 'x' << (i > 1 ? "^" + std::to_string(i) : "");
    if (j > 0) out << 'y' << (j > 1 ? "^" + std::to_string(j) : "");
  }
  return out.str();
}

TuttePolynomial tutte(const Multigraph& g) {
  WorkEdges edges;
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return tutte_rec(std::move(edges), g.vertex_count());
}

std::uint64_t count_trees_matrixtree(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 1;
  if (!g.is_connected()) return 0;
  std::vector<std::vector<mpz_class>> lap(static_cast<std::size_t>(n - 1),
                                          std::vector<mpz_class>(static_cast<std::size_t>(n - 1), 0));
  // Drop vertex 0.
  for (const Edge& e : g.edges()) {
    int a = e.u - 1, b = e.v - 1;
    if (a >= 0) lap[a][a] += 1;
    if (b >= 0) lap[b][b] += 1;
    if (a >= 0 && b >= 0) {
      lap[a][b] -= 1;
      lap[b][a] -= 1;
    }
  }
  mpz_class det = bareiss_determinant(std::move(lap));
  if (det < 0 || !det.fits_ulong_p()) throw BoundExceeded("spanning tree count overflows 64 bits");
  return det.get_ui();
}

EdgeSubset bridges(const Multigraph& g) {
  EdgeSubset out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    RollbackDsu dsu(g.vertex_count());
    for (std::size_t f = 0; f < g.edge_count(); ++f) {
      if (f != e) dsu.unite(g.edge(f).u, g.edge(f).v);
    }
    if (dsu.find(g.edge(e).u) != dsu.find(g.edge(e).v)) out.insert(e);
  }
  return out;
}

DeltaSubgraph delta_subgraph(const Multigraph& g) {
  require_connected(g);
  const EdgeSubset keep = g.all_edges() - bridges(g);
  VertexSubset used;
  for (std::size_t e : keep.members()) {
    used.insert(static_cast<std::size_t>(g.edge(e).u));
    used.insert(static_cast<std::size_t>(g.edge(e).v));
  }
  DeltaSubgraph out;
  std::vector<int> new_label(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t v : used.members()) {
    new_label[v] = static_cast<int>(out.vertex_map.size());
    out.vertex_map.push_back(static_cast<int>(v));
  }
  std::vector<Edge> edges;
  for (std::size_t e : keep.members()) {
    edges.push_back({new_label[static_cast<std::size_t>(g.edge(e).u)],
                     new_label[static_cast<std::size_t>(g.edge(e).v)]});
    out.edge_map.push_back(e);
  }
  out.graph = Multigraph(static_cast<int>(out.vertex_map.size()), std::move(edges));
  return out;
}

bool is_slim(const Multigraph& g, EdgeSubset subset) {
  require_connected(g);
  require_edge_subset(g, subset);
  return spans_connected(g, g.all_edges() - subset);
}

void for_each_forest(const Multigraph& g, const std::function<void(EdgeSubset)>& visit,
                     std::size_t edge_bound) {
  require_enumeration_bound(g, edge_bound);
  RollbackDsu dsu(g.vertex_count());
  EdgeSubset current;
  const std::size_t m = g.edge_count();
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      visit(current);
      return;
    }
    self(self, i + 1);
    if (dsu.unite(g.edge(i).u, g.edge(i).v)) {
      current.insert(i);
      self(self, i + 1);
      current.erase(i);
      dsu.undo();
    }
  };
  rec(rec, 0);
}

std::vector<EdgeSubset> enumerate_forests(const Multigraph& g, std::size_t edge_bound) {
  std::vector<EdgeSubset> out;
  for_each_forest(g, [&](EdgeSubset f) { out.push_back(f); }, edge_bound);
  return out;
}

std::vector<EdgeSubset> enumerate_trees(const Multigraph& g, std::size_t edge_bound) {
  std::vector<EdgeSubset> out;
  if (!g.is_connected()) {
    require_enumeration_bound(g, edge_bound);
    return out;
  }
  const std::size_t tree_size = g.vertex_count() > 0 ? static_cast<std::size_t>(g.vertex_count() - 1) : 0;
  for_each_forest(g, [&](EdgeSubset f) {
    if (f.size() == tree_size) out.push_back(f);
  }, edge_bound);
  return out;
}

namespace {

void add_to_histogram(std::vector<std::uint64_t>& hist, std::size_t k) {
  if (hist.size() <= k) hist.resize(k + 1, 0);
  ++hist[k];
}

}  // namespace

std::vector<std::uint64_t> forest_activity_series(const Multigraph& g, std::size_t edge_bound) {
  std::vector<std::uint64_t> hist;
  for_each_forest(g, [&](EdgeSubset f) {
    const auto ea = static_cast<std::size_t>(external_activity(g, f));
    add_to_histogram(hist, g.edge_count() - f.size() - ea);
  }, edge_bound);
  return hist;
}

std::vector<std::uint64_t> tree_activity_series(const Multigraph& g, std::size_t edge_bound) {
  std::vector<std::uint64_t> hist;
  const std::size_t n = g.vertex_count() > 0 ? static_cast<std::size_t>(g.vertex_count() - 1) : 0;
  for (EdgeSubset t : enumerate_trees(g, edge_bound)) {
    const auto ea = static_cast<std::size_t>(external_activity(g, t));
    add_to_histogram(hist, g.edge_count() - n - ea);
  }
  return hist;
}

std::vector<VertexSubset> connected_components(const Multigraph& g) {
  RollbackDsu dsu(g.vertex_count());
  for (const Edge& e : g.edges()) dsu.unite(e.u, e.v);
  std::vector<VertexSubset> out;
  std::vector<int> slot(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    int r = dsu.find(v);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].insert(static_cast<std::size_t>(v));
  }
  return out;
}

Multigraph induced_subgraph(const Multigraph& g, VertexSubset vertices) {
  std::vector<int> new_label(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  for (std::size_t v : vertices.members()) new_label[v] = next++;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    int a = new_label[static_cast<std::size_t>(e.u)];
    int b = new_label[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  return Multigraph(next, std::move(edges));
}

}  // namespace galg
