#include "galg/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "galg/errors.hpp"

namespace galg {

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix multiplicity_matrix(const Multigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Matrix m(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) {
    ++m[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
    ++m[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)];
  }
  return m;
}

std::vector<int> degrees(const Multigraph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Edge& e : g.edges()) {
    ++d[static_cast<std::size_t>(e.u)];
    ++d[static_cast<std::size_t>(e.v)];
  }
  return d;
}

/// Upper triangle of a multiplicity matrix in column-major order:
/// (0,1), (0,2), (1,2), (0,3), ... so that fixing the vertex at position j
/// fixes the next j entries.
using Key = std::vector<int>;

Multigraph graph_from_key(int n, const Key& key) {
  std::vector<Edge> edges;
  std::vector<std::pair<int, int>> pairs;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      for (int c = 0; c < key[k]; ++c) pairs.push_back({i, j});
    }
  }
  std::sort(pairs.begin(), pairs.end());
  for (auto [i, j] : pairs) edges.push_back({i, j});
  return Multigraph(n, std::move(edges));
}

Key canonical_key(const Multigraph& g) {
  const int n = g.vertex_count();
  const Matrix m = multiplicity_matrix(g);
  const std::vector<int> deg = degrees(g);

  // Position p may only hold a vertex whose degree equals the p-th largest.
  std::vector<int> by_degree(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) by_degree[static_cast<std::size_t>(v)] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)]; });

  const std::size_t key_len = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  Key best;
  Key current;
  current.reserve(key_len);
  std::vector<int> at(static_cast<std::size_t>(n), -1);  // position -> old vertex
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  // Returns: -1 current prefix smaller than best, 0 equal, 1 greater.
  auto compare_prefix = [&]() {
    if (best.empty()) return -1;
    for (std::size_t k = 0; k < current.size(); ++k) {
      if (current[k] != best[k]) return current[k] < best[k] ? -1 : 1;
    }
    return 0;
  };

  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      if (best.empty() || current < best) best = current;
      return;
    }
    const int want = deg[static_cast<std::size_t>(by_degree[static_cast<std::size_t>(pos)])];
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)] || deg[static_cast<std::size_t>(v)] != want) continue;
      used[static_cast<std::size_t>(v)] = true;
      at[static_cast<std::size_t>(pos)] = v;
      for (int i = 0; i < pos; ++i) {
        current.push_back(m[static_cast<std::size_t>(at[static_cast<std::size_t>(i)])][static_cast<std::size_t>(v)]);
      }
      if (compare_prefix() <= 0) rec(pos + 1);
      current.resize(current.size() - static_cast<std::size_t>(pos));
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(0);
  if (best.size() != key_len) best.assign(key_len, 0);
  return best;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const Multigraph& g1, const Multigraph& g2,
                                               std::size_t vertex_bound) {
  for (const Multigraph* g : {&g1, &g2}) {
    if (static_cast<std::size_t>(g->vertex_count()) > vertex_bound) {
      throw BoundExceeded("isomorphism test is limited to " + std::to_string(vertex_bound) +
                          " vertices");
    }
  }
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) {
    return std::nullopt;
  }
  const int n = g1.vertex_count();
  const std::vector<int> d1 = degrees(g1), d2 = degrees(g2);
  {
    auto s1 = d1, s2 = d2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  const Matrix m1 = multiplicity_matrix(g1), m2 = multiplicity_matrix(g2);
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  std::function<bool(int)> rec = [&](int v) {
    if (v == n) return true;
    const auto sv = static_cast<std::size_t>(v);
    for (int w = 0; w < n; ++w) {
      const auto sw = static_cast<std::size_t>(w);
      if (used[sw] || d1[sv] != d2[sw]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        const auto su = static_cast<std::size_t>(u);
        ok = m1[sv][su] == m2[sw][static_cast<std::size_t>(map[su])];
      }
      if (!ok) continue;
      used[sw] = true;
      map[sv] = w;
      if (rec(v + 1)) return true;
      used[sw] = false;
    }
    map[sv] = -1;
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return map;
}

Multigraph canonical_form(const Multigraph& g) {
  return graph_from_key(g.vertex_count(), canonical_key(g));
}

std::vector<Multigraph> enumerate_multigraphs(int vertex_count, int edge_count, bool connected_only) {
  if (vertex_count < 0 || edge_count < 0) throw InvalidInput("negative graph size");
  const int n = vertex_count;
  const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  std::set<Key> classes;
  if (pairs == 0) {
    if (edge_count == 0) classes.insert(Key{});
  } else {
    // Distribute the edges over the vertex pairs.
    Key counts(pairs, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t slot, int left) {
      if (slot + 1 == pairs) {
        counts[slot] = left;
        Multigraph g = graph_from_key(n, counts);
        if (!connected_only || g.is_connected()) classes.insert(canonical_key(g));
        return;
      }
      for (int c = left; c >= 0; --c) {
        counts[slot] = c;
        rec(slot + 1, left - c);
      }
    };
    rec(0, edge_count);
  }
  std::vector<Multigraph> out;
  out.reserve(classes.size());
  for (const Key& k : classes) out.push_back(graph_from_key(n, k));
  return out;
}

}  // namespace galg
