#include "isotriv/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace isotriv::weierstrass {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  strip();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  strip();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::linear_factor(const Rational& root) {
  return RationalPolynomial(std::vector<Rational>{-root, Rational(1)});
}

RationalPolynomial RationalPolynomial::from_roots(
    const std::vector<std::pair<Rational, unsigned>>& roots) {
  RationalPolynomial p = constant(1);
  for (const auto& [r, m] : roots) p = p * linear_factor(r).pow(m);
  return p;
}

void RationalPolynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RationalPolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational RationalPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational RationalPolynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& rhs) const {
  std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coefficient(i) + rhs.coefficient(i);
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& rhs) const {
  return *this + (-rhs);
}

RationalPolynomial RationalPolynomial::operator-() const {
  RationalPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator*(const Rational& scalar) const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c *= scalar;
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::pow(unsigned exponent) const {
  RationalPolynomial result = constant(1), base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divmod(
    const RationalPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {RationalPolynomial(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  const Rational& lead = divisor.leading();
  for (int i = degree(); i >= dd; --i) {
    Rational q = rem[static_cast<std::size_t>(i)] / lead;
    if (q == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = q;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return {};
  return *this * (Rational(1) / leading());
}

RationalPolynomial RationalPolynomial::primitive() const {
  if (is_zero()) return {};
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& c : coeffs_) den_lcm = lcm(den_lcm, c.get_den());
  for (const auto& c : coeffs_) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (leading() < 0) scale = -scale;
  return *this * scale;
}

std::string RationalPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (i == 0) {
      os << isotriv::to_string(mag);
      continue;
    }
    if (!unit) os << isotriv::to_string(mag) << "*";
    os << "t";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::string RationalPolynomial::to_coefficient_list() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ",";
    out += isotriv::to_string(coeffs_[i]);
  }
  return out;
}

RationalPolynomial RationalPolynomial::parse(std::string_view coefficient_list) {
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (true) {
    auto comma = coefficient_list.find(',', start);
    auto field = coefficient_list.substr(start, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - start);
    coeffs.push_back(parse_rational(field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a.primitive(), y = b.primitive();
  while (!y.is_zero()) {
    RationalPolynomial r = (x % y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<RationalPolynomial> square_free_decomposition(const RationalPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
  std::vector<RationalPolynomial> factors;
  if (p.degree() == 0) return factors;

  const RationalPolynomial f = p.monic();
  const RationalPolynomial df = f.derivative();
  RationalPolynomial a0 = gcd(f, df);
  RationalPolynomial b = f / a0;
  RationalPolynomial c = df / a0;
  RationalPolynomial d = c - b.derivative();
  while (b.degree() > 0) {
    RationalPolynomial ai = gcd(b, d);
    factors.push_back(ai);
    b = b / ai;
    c = d / ai;
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

}  // namespace isotriv::weierstrass
