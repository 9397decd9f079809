#include "isotriv/cm_field.hpp"

#include <sstream>
#include <stdexcept>

namespace isotriv::torus {

std::string field_name(CMField field) {
  switch (field) {
    case CMField::Gauss: return "gauss";
    case CMField::Eisenstein: return "eisenstein";
    case CMField::Rational: return "rational";
  }
  return "?";
}

CMField parse_field(std::string_view text) {
  if (text == "gauss") return CMField::Gauss;
  if (text == "eisenstein") return CMField::Eisenstein;
  if (text == "rational") return CMField::Rational;
  throw std::invalid_argument("unknown field '" + std::string(text) +
                              "' (expected gauss, eisenstein or rational)");
}

std::string tau_symbol(CMField field) {
  switch (field) {
    case CMField::Gauss: return "i";
    case CMField::Eisenstein: return "zeta";
    case CMField::Rational: return "";
  }
  return "?";
}

CMNumber::CMNumber(CMField field, Rational p, Rational q) : field_(field), p_(std::move(p)), q_(std::move(q)) {
  p_.canonicalize();
  q_.canonicalize();
  if (field_ == CMField::Rational && q_ != 0) {
    throw std::invalid_argument("the rational field has no tau component");
  }
}

CMNumber CMNumber::tau(CMField field) {
  if (field == CMField::Rational) throw std::invalid_argument("the rational field has no tau");
  return CMNumber(field, 0, 1);
}

namespace {

void require_same(const CMNumber& a, const CMNumber& b) {
  if (a.field() != b.field()) throw std::invalid_argument("mixing elements of different fields");
}

}  // namespace

CMNumber CMNumber::operator+(const CMNumber& rhs) const {
  require_same(*this, rhs);
  return CMNumber(field_, p_ + rhs.p_, q_ + rhs.q_);
}

CMNumber CMNumber::operator-(const CMNumber& rhs) const {
  require_same(*this, rhs);
  return CMNumber(field_, p_ - rhs.p_, q_ - rhs.q_);
}

CMNumber CMNumber::operator-() const { return CMNumber(field_, -p_, -q_); }

CMNumber CMNumber::operator*(const CMNumber& rhs) const {
  require_same(*this, rhs);
  const Rational& r = rhs.p_;
  const Rational& s = rhs.q_;
  switch (field_) {
    case CMField::Gauss: return CMNumber(field_, p_ * r - q_ * s, p_ * s + q_ * r);
    case CMField::Eisenstein: return CMNumber(field_, p_ * r - q_ * s, p_ * s + q_ * r + q_ * s);
    case CMField::Rational: return CMNumber(field_, p_ * r);
  }
  return {};
}

CMNumber CMNumber::operator*(const Rational& rhs) const { return CMNumber(field_, p_ * rhs, q_ * rhs); }

CMNumber CMNumber::operator/(const Rational& rhs) const {
  if (rhs == 0) throw std::domain_error("division by zero");
  return CMNumber(field_, p_ / rhs, q_ / rhs);
}

CMNumber CMNumber::conjugate() const {
  switch (field_) {
    case CMField::Gauss: return CMNumber(field_, p_, -q_);
    case CMField::Eisenstein: return CMNumber(field_, p_ + q_, -q_);
    case CMField::Rational: return *this;
  }
  return {};
}

Rational CMNumber::norm() const {
  switch (field_) {
    case CMField::Gauss: return p_ * p_ + q_ * q_;
    case CMField::Eisenstein: return p_ * p_ + p_ * q_ + q_ * q_;
    case CMField::Rational: return p_ * p_;
  }
  return 0;
}

CMNumber CMNumber::inverse() const {
  if (is_zero()) throw std::domain_error("zero has no inverse");
  return conjugate() / norm();
}

CMNumber CMNumber::pow(long exponent) const {
  CMNumber base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  CMNumber result(field_, 1);
  while (e != 0) {
    if (e & 1UL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

unsigned CMNumber::root_of_unity_order() const {
  const CMNumber one(field_, 1);
  CMNumber x = *this;
  for (unsigned k = 1; k <= 6; ++k) {
    if (x == one) return k;
    x = x * *this;
  }
  return 0;
}

std::string CMNumber::to_string() const {
  if (q_ == 0) return isotriv::to_string(p_);
  const std::string t = tau_symbol(field_);
  std::string tau_term;
  Rational mag = abs(q_);
  tau_term = (mag == 1 ? "" : isotriv::to_string(mag) + "*") + t;
  if (p_ == 0) return (q_ < 0 ? "-" : "") + tau_term;
  return isotriv::to_string(p_) + (q_ < 0 ? " - " : " + ") + tau_term;
}

CMNumber root_of_unity(CMField field, unsigned k) {
  switch (k) {
    case 1: return CMNumber(field, 1);
    case 2: return CMNumber(field, -1);
    default: break;
  }
  if (field == CMField::Gauss && k == 4) return CMNumber(field, 0, 1);
  if (field == CMField::Eisenstein && k == 6) return CMNumber(field, 0, 1);
  if (field == CMField::Eisenstein && k == 3) return CMNumber(field, -1, 1);
  throw std::invalid_argument("the " + field_name(field) + " field has no root of unity of order " +
                              std::to_string(k));
}

CMMatrix::CMMatrix(CMField field, std::size_t n) : field_(field), n_(n), a_(n * n, CMNumber(field, 0)) {}

CMMatrix CMMatrix::identity(CMField field, std::size_t n) {
  CMMatrix m(field, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CMNumber(field, 1);
  return m;
}

CMMatrix CMMatrix::diagonal(const std::vector<CMNumber>& entries) {
  if (entries.empty()) throw std::invalid_argument("empty diagonal");
  CMMatrix m(entries.front().field(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

CMMatrix CMMatrix::operator*(const CMMatrix& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("matrix size mismatch");
  CMMatrix out(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const CMNumber& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

CMMatrix CMMatrix::operator+(const CMMatrix& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("matrix size mismatch");
  CMMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
  return out;
}

CMMatrix CMMatrix::transpose() const {
  CMMatrix out(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

CMNumber CMMatrix::trace() const {
  CMNumber t(field_, 0);
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

CMNumber CMMatrix::determinant() const {
  CMMatrix m = *this;
  CMNumber det(field_, 1);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n_) return CMNumber(field_, 0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    const CMNumber inv = m(col, col).inverse();
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n_; ++i) {
      if (m(i, col).is_zero()) continue;
      const CMNumber factor = m(i, col) * inv;
      for (std::size_t j = col; j < n_; ++j) m(i, j) = m(i, j) - factor * m(col, j);
    }
  }
  return det;
}

CMMatrix CMMatrix::restrict_to(const std::vector<std::size_t>& indices) const {
  CMMatrix out(field_, indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = 0; j < indices.size(); ++j) out(i, j) = (*this)(indices[i], indices[j]);
  }
  return out;
}

std::vector<CMNumber> CMMatrix::characteristic_polynomial() const {
  std::vector<CMNumber> c(n_ + 1, CMNumber(field_, 0));
  c[n_] = CMNumber(field_, 1);
  CMMatrix m(field_, n_);
  const CMMatrix id = identity(field_, n_);
  for (std::size_t k = 1; k <= n_; ++k) {
    CMMatrix shifted = *this * m;
    for (std::size_t i = 0; i < n_; ++i) shifted(i, i) += c[n_ - k + 1];
    m = std::move(shifted);
    c[n_ - k] = -((*this * m).trace() / Rational(static_cast<long>(k)));
  }
  return c;
}

CMNumber CMMatrix::exterior_power_trace(std::size_t p) const {
  if (p > n_) return CMNumber(field_, 0);
  const auto c = characteristic_polynomial();
  CMNumber e = c[n_ - p];
  return p % 2 == 0 ? e : -e;
}

std::string CMMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) os << ",";
    os << "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) os << ",";
      os << (*this)(i, j).to_string();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace isotriv::torus
