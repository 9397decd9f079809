#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "isotriv/numeric.hpp"

namespace isotriv::weierstrass {

/// Dense univariate polynomial over Q; coefficient i multiplies t^i.
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  RationalPolynomial(std::initializer_list<long> coefficients);

  static RationalPolynomial constant(const Rational& c);
  /// t - root.
  static RationalPolynomial linear_factor(const Rational& root);
  /// prod (t - r)^m over the given (root, multiplicity) pairs.
  static RationalPolynomial from_roots(const std::vector<std::pair<Rational, unsigned>>& roots);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& leading() const;
  Rational coefficient(std::size_t i) const;

  Rational operator()(const Rational& t) const;

  RationalPolynomial operator+(const RationalPolynomial& rhs) const;
  RationalPolynomial operator-(const RationalPolynomial& rhs) const;
  RationalPolynomial operator-() const;
  RationalPolynomial operator*(const RationalPolynomial& rhs) const;
  RationalPolynomial operator*(const Rational& scalar) const;
  RationalPolynomial pow(unsigned exponent) const;

  /// Euclidean division; throws std::domain_error for a zero divisor.
  std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& divisor) const;
  RationalPolynomial operator/(const RationalPolynomial& divisor) const { return divmod(divisor).first; }
  RationalPolynomial operator%(const RationalPolynomial& divisor) const { return divmod(divisor).second; }

  RationalPolynomial derivative() const;
  RationalPolynomial monic() const;
  /// Scalar multiple with coprime integer coefficients and positive leading
  /// coefficient (the zero polynomial stays zero).
  RationalPolynomial primitive() const;

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// Human-readable, e.g. "t^2 - 3/2*t + 1".
  std::string to_string() const;
  /// Comma-separated coefficients, constant term first ("0,1,-3/2").
  std::string to_coefficient_list() const;
  /// Inverse of to_coefficient_list.  Throws std::invalid_argument.
  static RationalPolynomial parse(std::string_view coefficient_list);

 private:
  void strip();
  std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor (zero when both inputs are zero).  Each
/// remainder is replaced by its primitive part to keep coefficients small.
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

/// Yun's decomposition p = lc * prod_i factors[i-1]^i with the factors monic,
/// square-free and pairwise coprime; factors[i-1] has degree equal to the
/// number of distinct roots of multiplicity i over the algebraic closure.
/// Throws std::domain_error for the zero polynomial.
std::vector<RationalPolynomial> square_free_decomposition(const RationalPolynomial& p);

}  // namespace isotriv::weierstrass
