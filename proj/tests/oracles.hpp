// Brute-force reference implementations used only by the tests. Everything
// here works from the raw edge list and dense vectors, sharing no code with
// the library beyond the Multigraph container.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "galg/multigraph.hpp"

namespace oracle {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }

// Union-find without path compression tricks; speed is irrelevant here.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

inline int rank_of(const galg::Multigraph& g, Mask subset) {
  Dsu d(g.vertex_count());
  int r = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if ((subset >> e) & 1u) r += d.unite(g.edge(e).u, g.edge(e).v);
  }
  return r;
}

inline int components(const galg::Multigraph& g, Mask subset) { return g.vertex_count() - rank_of(g, subset); }

inline bool acyclic(const galg::Multigraph& g, Mask subset) { return rank_of(g, subset) == popcount(subset); }

inline Mask full(const galg::Multigraph& g) { return g.edge_count() == 64 ? ~Mask{0} : (Mask{1} << g.edge_count()) - 1; }

inline std::uint64_t count_forests(const galg::Multigraph& g) {
  std::uint64_t n = 0;
  for (Mask s = 0; s <= full(g); ++s) n += acyclic(g, s);
  return n;
}

inline std::uint64_t count_trees(const galg::Multigraph& g) {
  if (components(g, full(g)) != 1) return 0;
  std::uint64_t n = 0;
  for (Mask s = 0; s <= full(g); ++s) {
    n += acyclic(g, s) && popcount(s) == g.vertex_count() - 1;
  }
  return n;
}

// Edges of the unique cycle in forest + {e}, found by repeatedly stripping
// degree-one vertices. Empty when e joins two different trees.
inline Mask unique_cycle(const galg::Multigraph& g, Mask forest, std::size_t e) {
  Mask alive = forest | (Mask{1} << e);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t f = 0; f < g.edge_count(); ++f) {
      if ((alive >> f) & 1u) {
        ++deg[g.edge(f).u];
        ++deg[g.edge(f).v];
      }
    }
    for (std::size_t f = 0; f < g.edge_count(); ++f) {
      if (((alive >> f) & 1u) && (deg[g.edge(f).u] == 1 || deg[g.edge(f).v] == 1)) {
        alive &= ~(Mask{1} << f);
        changed = true;
      }
    }
  }
  return ((alive >> e) & 1u) ? alive : 0;
}

inline int external_activity(const galg::Multigraph& g, Mask forest) {
  int ea = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if ((forest >> e) & 1u) continue;
    const Mask c = unique_cycle(g, forest, e);
    if (c != 0 && (c & ((Mask{1} << e) - 1)) == 0) ++ea;
  }
  return ea;
}

// Entry k counts forests with |E| - |F| - EA(F) = k; with `trees`, only
// spanning trees, bucketed by |E| - (V - 1) - EA(T).
inline std::vector<std::uint64_t> activity_histogram(const galg::Multigraph& g, bool trees) {
  std::vector<std::uint64_t> h;
  const int m = static_cast<int>(g.edge_count());
  for (Mask s = 0; s <= full(g); ++s) {
    if (!acyclic(g, s)) continue;
    if (trees && (popcount(s) != g.vertex_count() - 1 || components(g, full(g)) != 1)) continue;
    const int base = trees ? g.vertex_count() - 1 : popcount(s);
    const auto k = static_cast<std::size_t>(m - base - external_activity(g, s));
    if (h.size() <= k) h.resize(k + 1, 0);
    ++h[k];
  }
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

// Tutte polynomial as the rank-generating sum over all edge subsets, with
// coefficients keyed by (x power, y power).
inline std::map<std::pair<int, int>, long long> tutte(const galg::Multigraph& g) {
  auto binom = [](int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  std::map<std::pair<int, int>, long long> out;
  const int rE = rank_of(g, full(g));
  for (Mask s = 0; s <= full(g); ++s) {
    const int r = rank_of(g, s);
    const int a = rE - r;
    const int b = popcount(s) - r;
    // (x-1)^a (y-1)^b
    for (int i = 0; i <= a; ++i) {
      for (int j = 0; j <= b; ++j) {
        const long long sign = ((a - i) + (b - j)) % 2 == 0 ? 1 : -1;
        out[{i, j}] += sign * binom(a, i) * binom(b, j);
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Dense elements of the square-free algebra: index = edge-subset mask.
using Dense = std::vector<mpq_class>;

struct Algebra {
  const galg::Multigraph& g;
  bool tree_quotient;

  std::size_t size() const { return std::size_t{1} << g.edge_count(); }

  bool admits(Mask s) const { return !tree_quotient || components(g, full(g) & ~s) == 1; }

  Dense zero() const { return Dense(size(), 0); }
  Dense one() const {
    Dense d = zero();
    d[0] = 1;
    return d;
  }
  Dense phi(std::size_t e) const {
    Dense d = zero();
    if (admits(Mask{1} << e)) d[Mask{1} << e] = 1;
    return d;
  }
  Dense mul(const Dense& a, const Dense& b) const {
    Dense r = zero();
    for (Mask x = 0; x < size(); ++x) {
      if (a[x] == 0) continue;
      for (Mask y = 0; y < size(); ++y) {
        if (b[y] == 0 || (x & y) != 0 || !admits(x | y)) continue;
        r[x | y] += a[x] * b[y];
      }
    }
    return r;
  }
  Dense add(Dense a, const Dense& b, const mpq_class& scale = 1) const {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
    return a;
  }

  // X_i written straight from the orientation rule.
  Dense x(int i) const {
    Dense d = zero();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edge(e);
      if (ed.u != i && ed.v != i) continue;
      const int other = ed.u == i ? ed.v : ed.u;
      d = add(d, phi(e), i < other ? 1 : -1);
    }
    return d;
  }
  // Y_i as the product of (1 + c phi_e).
  Dense y(int i) const {
    Dense d = one();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edge(e);
      if (ed.u != i && ed.v != i) continue;
      const int other = ed.u == i ? ed.v : ed.u;
      d = mul(d, add(one(), phi(e), i < other ? 1 : -1));
    }
    return d;
  }
};

inline std::size_t rank(std::vector<Dense> rows) {
  std::size_t r = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const mpq_class f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

// All products of exactly k generators (as multisets), k = 0 gives {1}.
inline std::vector<Dense> products(const Algebra& A, const std::vector<Dense>& gens, std::size_t k) {
  std::vector<std::pair<std::size_t, Dense>> level{{0, A.one()}};
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<std::pair<std::size_t, Dense>> next;
    for (const auto& [start, p] : level) {
      for (std::size_t i = start; i < gens.size(); ++i) next.emplace_back(i, A.mul(p, gens[i]));
    }
    level = std::move(next);
  }
  std::vector<Dense> out;
  for (auto& [i, p] : level) out.push_back(std::move(p));
  return out;
}

inline std::vector<std::uint64_t> graded_series(const Algebra& A, const std::vector<Dense>& gens) {
  std::vector<std::uint64_t> s;
  for (std::size_t k = 0;; ++k) {
    const std::size_t r = rank(products(A, gens, k));
    if (r == 0) break;
    s.push_back(r);
  }
  return s;
}

inline std::vector<std::uint64_t> filtered_series(const Algebra& A, const std::vector<Dense>& gens) {
  std::vector<std::uint64_t> s;
  std::vector<Dense> span;
  std::size_t prev = 0;
  for (std::size_t k = 0;; ++k) {
    for (auto& p : products(A, gens, k)) span.push_back(std::move(p));
    const std::size_t r = rank(span);
    if (k > 0 && r == prev) break;
    s.push_back(r - prev);
    prev = r;
  }
  return s;
}

}  // namespace oracle
