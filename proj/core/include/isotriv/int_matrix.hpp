#pragma once

// Dense integer matrices with the lattice reductions used for congruences
// modulo Z^n: Smith and Hermite normal forms.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "isotriv/numeric.hpp"

namespace isotriv::torus {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator-() const;
  IntMatrix transpose() const;

  bool is_zero() const;
  /// Fraction-free (Bareiss) elimination; square matrices only.
  Integer determinant() const;
  std::size_t rank() const;
  /// Inverse of a unimodular matrix; nullopt when det != +-1.
  std::optional<IntMatrix> unimodular_inverse() const;

  IntMatrix rows_range(std::size_t first, std::size_t count) const;
  IntMatrix cols_range(std::size_t first, std::size_t count) const;

  /// "[[1,0],[0,1]]".
  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> a_;
};

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... with
/// the nonzero entries positive and first.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;

  Integer invariant(std::size_t i) const { return D(i, i); }
};
SmithForm smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form: U * A = H, H upper echelon with positive
/// pivots, entries above each pivot reduced into [0, pivot), zero rows last.
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
};
HermiteForm hermite_normal_form(const IntMatrix& a);

}  // namespace isotriv::torus
