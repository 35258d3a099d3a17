#include "galg/multigraph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include "galg/errors.hpp"

namespace galg {

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 0 || static_cast<std::size_t>(vertex_count) > kMaxVertices) {
    throw InvalidInput("vertex count must lie in [0, " + std::to_string(kMaxVertices) + "]");
  }
  if (edges_.size() > kMaxEdges) {
    throw InvalidInput("at most " + std::to_string(kMaxEdges) + " edges are supported");
  }
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      throw InvalidInput("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") has an endpoint outside 0.." + std::to_string(vertex_count - 1));
    }
    if (e.u == e.v) {
      throw InvalidInput("loop at vertex " + std::to_string(e.u) + " is not allowed");
    }
  }
}

int Multigraph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges_) d += (e.u == v) + (e.v == v);
  return d;
}

int Multigraph::multiplicity(int u, int v) const {
  int m = 0;
  for (const Edge& e : edges_) {
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) ++m;
  }
  return m;
}

EdgeSubset Multigraph::incident_edges(int v) const {
  EdgeSubset s;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u == v || edges_[i].v == v) s.insert(i);
  }
  return s;
}

bool Multigraph::has_isolated_vertex() const {
  std::vector<bool> touched(static_cast<std::size_t>(vertex_count_), false);
  for (const Edge& e : edges_) {
    touched[static_cast<std::size_t>(e.u)] = true;
    touched[static_cast<std::size_t>(e.v)] = true;
  }
  return std::find(touched.begin(), touched.end(), false) != touched.end();
}

bool Multigraph::is_connected() const {
  if (vertex_count_ <= 1) return true;
  std::vector<int> parent(static_cast<std::size_t>(vertex_count_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = vertex_count_;
  for (const Edge& e : edges_) {
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

Multigraph Multigraph::relabeled(std::span<const int> new_label) const {
  if (new_label.size() != static_cast<std::size_t>(vertex_count_)) {
    throw InvalidInput("relabeling has wrong length");
  }
  std::vector<bool> seen(new_label.size(), false);
  for (int l : new_label) {
    if (l < 0 || l >= vertex_count_ || seen[static_cast<std::size_t>(l)]) {
      throw InvalidInput("relabeling is not a permutation");
    }
    seen[static_cast<std::size_t>(l)] = true;
  }
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back({new_label[e.u], new_label[e.v]});
  return Multigraph(vertex_count_, std::move(out));
}

Multigraph Multigraph::with_edge_order(std::span<const std::size_t> order) const {
  if (order.size() != edges_.size()) throw InvalidInput("edge order has wrong length");
  std::vector<bool> seen(order.size(), false);
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (std::size_t i : order) {
    if (i >= edges_.size() || seen[i]) throw InvalidInput("edge order is not a permutation");
    seen[i] = true;
    out.push_back(edges_[i]);
  }
  return Multigraph(vertex_count_, std::move(out));
}

Multigraph Multigraph::edge_subgraph(EdgeSubset keep) const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (keep.contains(i)) out.push_back(edges_[i]);
  }
  return Multigraph(vertex_count_, std::move(out));
}

Multigraph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  int vertex_count = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    std::string rest;
    if (vertex_count < 0) {
      int n = 0;
      if (first != "vertices" || !(ls >> n) || (ls >> rest)) {
        throw ParseError(line_no, "expected 'vertices N'");
      }
      if (n < 1 || static_cast<std::size_t>(n) > kMaxVertices) {
        throw ParseError(line_no, "vertex count must lie in [1, " + std::to_string(kMaxVertices) + "]");
      }
      vertex_count = n;
      continue;
    }
    Edge e;
    std::istringstream fs(first);
    if (!(fs >> e.u) || !fs.eof() || !(ls >> e.v) || (ls >> rest)) {
      throw ParseError(line_no, "expected an edge 'u v'");
    }
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      throw ParseError(line_no, "vertex out of range 0.." + std::to_string(vertex_count - 1));
    }
    if (e.u == e.v) throw ParseError(line_no, "loops are not allowed");
    if (edges.size() == kMaxEdges) {
      throw ParseError(line_no, "more than " + std::to_string(kMaxEdges) + " edges");
    }
    edges.push_back(e);
  }
  if (vertex_count < 0) throw ParseError(line_no, "missing 'vertices N' header");
  return Multigraph(vertex_count, std::move(edges));
}

Multigraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Multigraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file " + path.string());
  return parse_graph(in);
}

std::string format_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Multigraph path_graph(int vertex_count) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < vertex_count; ++i) edges.push_back({i, i + 1});
  return Multigraph(vertex_count, std::move(edges));
}

Multigraph cycle_graph(int vertex_count) {
  std::vector<Edge> edges;
  for (int i = 0; i < vertex_count; ++i) edges.push_back({i, (i + 1) % vertex_count});
  return Multigraph(vertex_count, std::move(edges));
}

Multigraph complete_graph(int vertex_count) {
  std::vector<Edge> edges;
  for (int i = 0; i < vertex_count; ++i) {
    for (int j = i + 1; j < vertex_count; ++j) edges.push_back({i, j});
  }
  return Multigraph(vertex_count, std::move(edges));
}

}  // namespace galg
