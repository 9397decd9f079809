#pragma once

// Q(i), Q(zeta) with zeta a primitive sixth root of unity, and Q itself,
// with elements written p + q*tau in the lattice basis {1, tau}.

#include <string>
#include <string_view>
#include <vector>

#include "isotriv/numeric.hpp"

namespace isotriv::torus {

enum class CMField { Gauss, Eisenstein, Rational };

std::string field_name(CMField field);
/// Accepts "gauss", "eisenstein", "rational".
CMField parse_field(std::string_view text);
/// "i", "zeta" or "" for the rational field.
std::string tau_symbol(CMField field);

/// Exact element p + q*tau.  tau^2 = -1 (Gauss), tau^2 = tau - 1 (Eisenstein);
/// over the rational field q is always zero.
class CMNumber {
 public:
  CMNumber() = default;
  CMNumber(CMField field, Rational p, Rational q = 0);

  static CMNumber tau(CMField field);

  CMField field() const { return field_; }
  const Rational& real_part() const { return p_; }
  const Rational& tau_part() const { return q_; }
  bool is_zero() const { return p_ == 0 && q_ == 0; }
  bool is_rational() const { return q_ == 0; }

  CMNumber operator+(const CMNumber& rhs) const;
  CMNumber operator-(const CMNumber& rhs) const;
  CMNumber operator-() const;
  CMNumber operator*(const CMNumber& rhs) const;
  CMNumber operator*(const Rational& rhs) const;
  CMNumber operator/(const Rational& rhs) const;
  CMNumber& operator+=(const CMNumber& rhs) { return *this = *this + rhs; }
  CMNumber& operator*=(const CMNumber& rhs) { return *this = *this * rhs; }

  /// Complex conjugate: i -> -i, zeta -> 1 - zeta.
  CMNumber conjugate() const;
  /// p^2 + q^2 (Gauss) or p^2 + pq + q^2 (Eisenstein).
  Rational norm() const;
  /// Throws std::domain_error on zero.
  CMNumber inverse() const;
  CMNumber pow(long exponent) const;
  /// Multiplicative order for a root of unity; 0 otherwise.
  unsigned root_of_unity_order() const;

  /// "1/2 - 3*zeta", "i", "-1".
  std::string to_string() const;

  friend bool operator==(const CMNumber& a, const CMNumber& b) {
    return a.field_ == b.field_ && a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  CMField field_ = CMField::Gauss;
  Rational p_;
  Rational q_;
};

/// A root of unity of order k in the field; throws std::invalid_argument if
/// the field has none (k must divide 4 for Gauss, 6 for Eisenstein, 2 for Q).
CMNumber root_of_unity(CMField field, unsigned k);

/// Square matrix over a CM field.
class CMMatrix {
 public:
  CMMatrix() = default;
  CMMatrix(CMField field, std::size_t n);
  static CMMatrix identity(CMField field, std::size_t n);
  static CMMatrix diagonal(const std::vector<CMNumber>& entries);

  CMField field() const { return field_; }
  std::size_t size() const { return n_; }
  CMNumber& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const CMNumber& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  CMMatrix operator*(const CMMatrix& rhs) const;
  CMMatrix operator+(const CMMatrix& rhs) const;
  CMMatrix transpose() const;
  CMNumber trace() const;
  CMNumber determinant() const;
  /// Principal submatrix on the given indices.
  CMMatrix restrict_to(const std::vector<std::size_t>& indices) const;

  /// c_0..c_n with det(x I - A) = sum c_k x^k (Faddeev-LeVerrier).
  std::vector<CMNumber> characteristic_polynomial() const;
  /// e_p of the eigenvalues, i.e. the trace of the p-th exterior power.
  CMNumber exterior_power_trace(std::size_t p) const;

  std::string to_string() const;

  friend bool operator==(const CMMatrix&, const CMMatrix&) = default;

 private:
  CMField field_ = CMField::Gauss;
  std::size_t n_ = 0;
  std::vector<CMNumber> a_;
};

}  // namespace isotriv::torus
