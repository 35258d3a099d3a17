#ifndef GALG_UNIPOLY_HPP
#define GALG_UNIPOLY_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "galg/rational.hpp"

namespace galg {

/// Univariate polynomial over the rationals; coefficient i multiplies x^i.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly identity();
  /// exp(x) - 1 truncated at x^degree.
  static UniPoly exp_minus_one(std::size_t degree);
  /// log(1 + x) truncated at x^degree.
  static UniPoly log_one_plus(std::size_t degree);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  bool has_zero_constant_term() const;
  bool has_nonzero_linear_term() const;

  /// Drops every term of degree above `degree`.
  UniPoly truncated(std::size_t degree) const;

  /// Comma-separated coefficients from degree 0 upward, e.g. "0, 1, 1/2".
  std::string to_string() const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Parses the comma-separated coefficient format; whitespace and newlines
/// are ignored and '#' starts a comment. Throws ParseError.
UniPoly parse_unipoly(std::string_view text);
UniPoly read_unipoly_file(const std::filesystem::path& path);

}  // namespace galg

#endif  // GALG_UNIPOLY_HPP
