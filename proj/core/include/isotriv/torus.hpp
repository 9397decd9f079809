#pragma once

// Points and affine automorphisms of E^d = (C / <1, tau>)^d in lattice
// coordinates: complex coordinate z_k = x_{2k} + x_{2k+1} * tau, each real
// lattice coordinate taken modulo 1.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isotriv/cm_field.hpp"
#include "isotriv/int_matrix.hpp"
#include "isotriv/numeric.hpp"

namespace isotriv::torus {

/// Multiplication by tau on the lattice basis {1, tau}; throws for the
/// rational field.
IntMatrix tau_block(CMField field);

/// Lattice block of multiplication by an integral CM number.
IntMatrix multiplication_block(const CMNumber& a);

class TorusPoint {
 public:
  TorusPoint() = default;
  /// Reduces every coordinate into [0, 1).
  explicit TorusPoint(std::vector<Rational> coords);
  static TorusPoint zero(std::size_t lattice_dimension);
  /// One (p, q) pair per complex coordinate p + q*tau.
  static TorusPoint from_complex(const std::vector<CMNumber>& z);

  const std::vector<Rational>& coords() const { return coords_; }
  std::size_t lattice_dimension() const { return coords_.size(); }
  std::size_t complex_dimension() const { return coords_.size() / 2; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  /// Least common denominator of the coordinates.
  Integer denominator() const;

  /// "(1/4, 0, 3/4, 0)".
  std::string to_string() const;
  /// Comma-separated rationals, parentheses optional.
  static TorusPoint parse(std::string_view text);

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
  friend std::strong_ordering operator<=>(const TorusPoint& a, const TorusPoint& b);

 private:
  std::vector<Rational> coords_;
};

/// x -> M x + t (mod Z^{2d}) with M unimodular and holomorphic, i.e.
/// commuting with the block-diagonal tau matrix.
class TorusAutomorphism {
 public:
  TorusAutomorphism() = default;
  /// Throws std::invalid_argument when M is not square of even size, has
  /// determinant other than +-1, does not commute with multiplication by tau
  /// (or is not blockwise scalar over the rational field), or the
  /// translation has the wrong length.
  TorusAutomorphism(CMField field, IntMatrix linear, TorusPoint translation);
  static TorusAutomorphism identity(CMField field, std::size_t complex_dimension);
  /// Linear part from a d x d matrix with integral CM entries.
  static TorusAutomorphism from_holomorphic(const CMMatrix& a, const TorusPoint& translation);

  CMField field() const { return field_; }
  std::size_t complex_dimension() const { return linear_.rows() / 2; }
  std::size_t lattice_dimension() const { return linear_.rows(); }
  const IntMatrix& linear() const { return linear_; }
  const TorusPoint& translation() const { return translation_; }
  bool is_identity() const;

  TorusPoint apply(const TorusPoint& x) const;
  /// (this o first)(x) = this(first(x)).
  TorusAutomorphism compose(const TorusAutomorphism& first) const;
  TorusAutomorphism inverse() const;
  /// The d x d complex matrix of the linear part.
  CMMatrix holomorphic_matrix() const;

  friend bool operator==(const TorusAutomorphism&, const TorusAutomorphism&) = default;
  friend std::strong_ordering operator<=>(const TorusAutomorphism& a, const TorusAutomorphism& b);

 private:
  CMField field_ = CMField::Gauss;
  IntMatrix linear_;
  TorusPoint translation_;
};

/// Solution set of N x = b (mod Z^n) for an integer matrix N, organised by
/// the Smith normal form U N V = D: with x = V y, the first `rank`
/// coordinates of y take finitely many values and the rest are free.
class CongruenceSolution {
 public:
  CongruenceSolution(const IntMatrix& n, const std::vector<Rational>& b);

  bool solvable() const { return solvable_; }
  std::size_t rank() const { return rank_; }
  std::size_t free_dimension() const { return V_.cols() - rank_; }
  /// Number of connected components, prod d_i.
  Integer component_count() const;
  /// Columns spanning the tangent lattice of every component.
  IntMatrix directions() const { return V_.cols_range(rank_, V_.cols() - rank_); }
  /// Rows of V^-1 cutting out the components (the annihilator lattice).
  IntMatrix annihilator() const { return Vinv_.rows_range(0, rank_); }
  const std::vector<Integer>& invariants() const { return d_; }

  /// Sample point of the component with index digits k_i in [0, d_i).
  TorusPoint sample(const std::vector<Integer>& digits) const;
  /// Calls f(sample) for every component, in odometer order.
  template <typename F>
  void for_each_component(F&& f) const;

  /// Whether x satisfies N x = b mod Z^n.
  bool contains(const TorusPoint& x) const;

  /// Base solution y_i = s_i / d_i before adding k_i / d_i.
  const std::vector<Rational>& shifts() const { return s_; }
  const IntMatrix& V() const { return V_; }

 private:
  bool solvable_ = false;
  std::size_t rank_ = 0;
  std::vector<Integer> d_;
  std::vector<Rational> s_;
  IntMatrix V_;
  IntMatrix Vinv_;
  IntMatrix N_;
  std::vector<Rational> b_;
};

struct FixedComponent {
  /// Complex dimension.
  std::size_t dimension = 0;
  TorusPoint sample;
  /// Lattice direction basis as columns (2d x 2*dimension).
  IntMatrix directions;
};

/// Fixed points of x -> M x + t, i.e. solutions of (M - I) x = -t.
class FixedLocus {
 public:
  explicit FixedLocus(const TorusAutomorphism& g);

  bool solvable() const { return solution_.solvable(); }
  /// Complex dimension of each component (all components are parallel).
  std::size_t dimension() const { return solution_.free_dimension() / 2; }
  /// Zero when not solvable.
  Integer component_count() const;
  /// All fixed points when M - I is nonsingular; empty otherwise.
  std::vector<TorusPoint> isolated_points() const;
  /// Positive-dimensional components; empty when M - I is nonsingular.
  std::vector<FixedComponent> components() const;
  bool contains(const TorusPoint& x) const;

  const CongruenceSolution& solution() const { return solution_; }

 private:
  CongruenceSolution solution_;
};

FixedLocus fixed_locus(const TorusAutomorphism& g);

/// True iff b lies in the lattice, i.e. every coordinate is an integer.
/// Takes raw (unreduced) coordinates.
bool splitting_test(const std::vector<Rational>& b);

// ---------------------------------------------------------------------------

template <typename F>
void CongruenceSolution::for_each_component(F&& f) const {
  if (!solvable_) return;
  std::vector<Integer> digits(rank_, 0);
  while (true) {
    f(sample(digits));
    std::size_t i = 0;
    while (i < rank_) {
      digits[i] += 1;
      if (digits[i] < d_[i]) break;
      digits[i] = 0;
      ++i;
    }
    if (i == rank_) return;
  }
}

}  // namespace isotriv::torus
