#ifndef GALG_SQUAREFREE_HPP
#define GALG_SQUAREFREE_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "galg/multigraph.hpp"
#include "galg/rational.hpp"

namespace galg {

enum class AmbientKind { full, tree };

/// The algebra an element lives in: the square-free algebra of a graph
/// (phi_e^2 = 0), or its tree quotient, where every monomial whose support is
/// not slim is zero.
class Ambient {
 public:
  static std::shared_ptr<const Ambient> full(Multigraph g);
  /// Throws InvalidInput when g is disconnected.
  static std::shared_ptr<const Ambient> tree(Multigraph g);
  static std::shared_ptr<const Ambient> make(AmbientKind kind, Multigraph g);

  AmbientKind kind() const { return kind_; }
  const Multigraph& graph() const { return graph_; }
  std::size_t edge_count() const { return graph_.edge_count(); }

  /// Whether the monomial with this support is a basis element (nonzero).
  bool admits(EdgeSubset support) const;
  /// Number of admissible monomials: 2^|E| or the number of slim subsets.
  std::size_t dimension() const;

  /// Same kind over an equal graph.
  bool same_as(const Ambient& other) const;

 private:
  Ambient(AmbientKind kind, Multigraph g);

  AmbientKind kind_;
  Multigraph graph_;
  // Slim table for tree ambients with few enough edges; empty otherwise.
  std::vector<bool> slim_;
};

using AmbientPtr = std::shared_ptr<const Ambient>;

/// Sparse exact-rational combination of square-free monomials.
///
/// Terms are kept sorted by support (numeric order of the bitmask), carry no
/// zero coefficients, and in a tree ambient only slim supports appear, so two
/// elements are equal iff their term lists are equal.
class AlgebraElement {
 public:
  using Term = std::pair<EdgeSubset, Rational>;

  explicit AlgebraElement(AmbientPtr ambient);

  static AlgebraElement zero(AmbientPtr ambient) { return AlgebraElement(std::move(ambient)); }
  static AlgebraElement constant(AmbientPtr ambient, const Rational& c);
  static AlgebraElement one(AmbientPtr ambient) { return constant(std::move(ambient), 1); }
  /// `c` times the monomial with the given support; zero when the support is
  /// not admitted by the ambient.
  static AlgebraElement monomial(AmbientPtr ambient, EdgeSubset support, const Rational& c = 1);
  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static AlgebraElement from_terms(AmbientPtr ambient, std::vector<Term> terms);

  const AmbientPtr& ambient() const { return ambient_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(EdgeSubset support) const;
  Rational constant_term() const { return coefficient(EdgeSubset{}); }
  /// Edges e whose monomial phi_e has a nonzero coefficient.
  EdgeSubset support_degree1() const;
  /// True iff every term has exactly `degree` edges (the zero element is
  /// homogeneous of every degree).
  bool is_homogeneous(std::size_t degree) const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& c);
  AlgebraElement operator-() const;

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& c) { return a *= c; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
  /// Product in the ambient algebra. Throws InvalidInput on ambient mismatch.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  AlgebraElement pow(std::size_t k) const;

  /// Adds `c * monomial(support)` in place (support must be admitted).
  void add_term(EdgeSubset support, const Rational& c);

  /// Deterministic debug form, e.g. "3 * φ_{0}φ_{2} + -1/2 * φ_{1}"; "0" for
  /// zero. Terms in lexicographic order of their sorted edge lists.
  std::string to_string() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  void require_same_ambient(const AlgebraElement& o) const;

  AmbientPtr ambient_;
  std::vector<Term> terms_;
};

/// The monomial phi_e. Throws InvalidInput for an invalid edge index.
AlgebraElement phi(const AmbientPtr& ambient, std::size_t e);

}  // namespace galg

#endif  // GALG_SQUAREFREE_HPP
