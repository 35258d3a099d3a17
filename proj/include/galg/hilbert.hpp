#ifndef GALG_HILBERT_HPP
#define GALG_HILBERT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "galg/squarefree.hpp"
#include "galg/unipoly.hpp"

namespace galg {

/// Dimensions of the (associated) graded components, index = degree.
/// Trailing zeros are trimmed; a nonzero series starts with 1 (constants).
class HilbertSeries {
 public:
  HilbertSeries() = default;
  explicit HilbertSeries(std::vector<std::uint64_t> coeffs);

  const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }
  std::uint64_t coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : 0;
  }
  std::size_t size() const { return coeffs_.size(); }
  std::uint64_t total() const;

  /// e.g. "1 + 2t + 3t^2 + t^3".
  std::string to_string() const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
  friend auto operator<=>(const HilbertSeries&, const HilbertSeries&) = default;

 private:
  std::vector<std::uint64_t> coeffs_;
};

/// Row-echelon basis of a linear span inside one ambient algebra.
///
/// Each row is normalized so that its smallest monomial (its pivot) has
/// coefficient 1, and no row contains another row's pivot at a smaller
/// position than that row's own pivot. Reduction is exact.
class SpanBasis {
 public:
  explicit SpanBasis(AmbientPtr ambient);

  /// Reduces `v` against the basis. Returns true and stores the remainder as
  /// a new row when it is nonzero.
  bool insert(const AlgebraElement& v);
  /// Remainder of `v` modulo the span (zero iff v lies in the span).
  AlgebraElement reduce(const AlgebraElement& v) const;
  bool contains(const AlgebraElement& v) const { return reduce(v).is_zero(); }

  std::size_t size() const { return rows_.size(); }
  const std::vector<AlgebraElement>& rows() const { return rows_; }
  const AmbientPtr& ambient() const { return ambient_; }

 private:
  AmbientPtr ambient_;
  std::vector<AlgebraElement> rows_;
  std::unordered_map<std::uint64_t, std::size_t> pivot_row_;
};

struct SeriesResult {
  HilbertSeries series;
  /// Graded: dim of each homogeneous component. Filtered: dim F_k.
  std::vector<std::size_t> dimensions;
  /// First k at which the computation stabilized (component k+1 is zero,
  /// or F_{k+1} = F_k).
  std::size_t plateau_k = 0;
  /// Set by generic_series only: whether every seed gave the same series.
  std::optional<bool> consensus;
};

/// Hilbert series of the graded algebra generated by degree-1 elements.
/// Throws InvalidInput when a generator is not homogeneous of degree 1 or
/// the generators do not share an ambient.
SeriesResult graded_series(std::span<const AlgebraElement> gens);

/// Hilbert series of the associated graded algebra of the filtration
/// F_k = span of products of at most k generators.
SeriesResult filtered_series(std::span<const AlgebraElement> gens);

/// Basis of the whole subalgebra generated by 1 and `gens`.
SpanBasis subalgebra_basis(const AmbientPtr& ambient, std::span<const AlgebraElement> gens);

/// Random f of degree exactly `degree` with zero constant term, nonzero
/// linear term and integer coefficients in [-bound, bound].
UniPoly sample_admissible_poly(std::size_t degree, std::uint64_t seed, int bound = 1000);

/// Generic Hilbert series of the f-algebras: filtered series of {f(X_i)}
/// for one sampled f per seed (degree |E|). When samples disagree the
/// majorization-maximal one is returned (ties broken by first seen) and
/// consensus is false. Throws InvalidInput for fewer than two seeds.
SeriesResult generic_series(const AmbientPtr& ambient, std::span<const std::uint64_t> seeds);

inline constexpr std::uint64_t kDefaultGenericSeeds[] = {1, 2, 3};

enum class Majorization { less, equal, greater, incomparable };

/// Compares prefix sums (shorter series padded with zeros).
Majorization majorize(const HilbertSeries& a, const HilbertSeries& b);
const char* to_string(Majorization m);

}  // namespace galg

#endif  // GALG_HILBERT_HPP
