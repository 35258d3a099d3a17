#ifndef GALG_MULTIGRAPH_HPP
#define GALG_MULTIGRAPH_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace galg {

/// Hard limit imposed by the 64-bit edge masks (bit 63 is never used so
/// that `1 << edge_count` stays representable).
inline constexpr std::size_t kMaxEdges = 63;
inline constexpr std::size_t kMaxVertices = 64;

namespace detail {

template <class Tag>
struct BitSubset {
  std::uint64_t bits = 0;

  static constexpr BitSubset singleton(std::size_t i) { return {std::uint64_t{1} << i}; }
  static constexpr BitSubset first(std::size_t count) {
    return {count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1};
  }

  constexpr bool contains(std::size_t i) const { return (bits >> i) & 1u; }
  constexpr bool empty() const { return bits == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits)); }
  constexpr bool intersects(BitSubset o) const { return (bits & o.bits) != 0; }
  constexpr bool is_subset_of(BitSubset o) const { return (bits & ~o.bits) == 0; }
  constexpr void insert(std::size_t i) { bits |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits &= ~(std::uint64_t{1} << i); }

  constexpr BitSubset operator|(BitSubset o) const { return {bits | o.bits}; }
  constexpr BitSubset operator&(BitSubset o) const { return {bits & o.bits}; }
  /// Set difference.
  constexpr BitSubset operator-(BitSubset o) const { return {bits & ~o.bits}; }

  /// Indices of members in increasing order.
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr auto operator<=>(BitSubset, BitSubset) = default;
};

struct EdgeTag {};
struct VertexTag {};

}  // namespace detail

/// Set of edge indices; also the support of a square-free monomial.
using EdgeSubset = detail::BitSubset<detail::EdgeTag>;
/// Set of vertex labels.
using VertexSubset = detail::BitSubset<detail::VertexTag>;

struct Edge {
  int u = 0;
  int v = 0;

  friend constexpr bool operator==(Edge, Edge) = default;
};

/// Loopless labeled multigraph on the vertices 0..vertex_count()-1.
///
/// The edge list order is part of the value: it is the linear order used for
/// external activity, and edge i corresponds to the algebra variable phi_i.
/// Parallel edges are repeated entries. The graph with zero vertices is a
/// valid value (it arises as the Delta-subgraph of a tree).
class Multigraph {
 public:
  Multigraph() = default;
  /// Throws InvalidInput on loops, out-of-range endpoints, or sizes beyond
  /// kMaxVertices / kMaxEdges.
  explicit Multigraph(int vertex_count, std::vector<Edge> edges = {});

  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  EdgeSubset all_edges() const { return EdgeSubset::first(edges_.size()); }
  VertexSubset all_vertices() const {
    return VertexSubset::first(static_cast<std::size_t>(vertex_count_));
  }

  int degree(int v) const;
  /// Number of parallel edges joining u and v.
  int multiplicity(int u, int v) const;
  /// Edges with at least one endpoint equal to v.
  EdgeSubset incident_edges(int v) const;
  bool has_isolated_vertex() const;
  bool is_connected() const;

  /// `new_label[old]` gives the label of each old vertex in the result.
  /// Edge order is kept.
  Multigraph relabeled(std::span<const int> new_label) const;
  /// `order[k]` is the old index of the edge placed at position k.
  Multigraph with_edge_order(std::span<const std::size_t> order) const;
  /// Spanning subgraph (same vertices) restricted to `keep`, edge order kept.
  Multigraph edge_subgraph(EdgeSubset keep) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Reads the text format: a "vertices N" line, then one "u v" line per edge
/// (0-based). Repeated lines add parallel edges, '#' starts a comment, and
/// the edge order is the line order. Throws ParseError with the line number.
Multigraph parse_graph(std::istream& in);
Multigraph parse_graph(const std::string& text);
Multigraph read_graph_file(const std::filesystem::path& path);
std::string format_graph(const Multigraph& g);

// Small named graphs used by tests, examples and the CLI.
Multigraph path_graph(int vertex_count);
Multigraph cycle_graph(int vertex_count);
Multigraph complete_graph(int vertex_count);

}  // namespace galg

#endif  // GALG_MULTIGRAPH_HPP
