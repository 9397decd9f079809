#include "isotriv/torus.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace isotriv::torus {

IntMatrix tau_block(CMField field) {
  switch (field) {
    case CMField::Gauss: return IntMatrix::from_rows({{0, -1}, {1, 0}});
    case CMField::Eisenstein: return IntMatrix::from_rows({{0, -1}, {1, 1}});
    case CMField::Rational: break;
  }
  throw std::invalid_argument("the rational field has no tau");
}

IntMatrix multiplication_block(const CMNumber& a) {
  if (!is_integral(a.real_part()) || !is_integral(a.tau_part())) {
    throw std::invalid_argument("multiplication by " + a.to_string() + " does not preserve the lattice");
  }
  IntMatrix b = IntMatrix::identity(2);
  b(0, 0) = a.real_part().get_num();
  b(1, 1) = a.real_part().get_num();
  if (a.field() != CMField::Rational && a.tau_part() != 0) {
    const IntMatrix j = tau_block(a.field());
    const Integer q = a.tau_part().get_num();
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) b(r, c) += q * j(r, c);
    }
  }
  return b;
}

// ---------------------------------------------------------------------------

TorusPoint::TorusPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  for (auto& c : coords_) c = frac(c);
}

TorusPoint TorusPoint::zero(std::size_t lattice_dimension) {
  return TorusPoint(std::vector<Rational>(lattice_dimension));
}

TorusPoint TorusPoint::from_complex(const std::vector<CMNumber>& z) {
  std::vector<Rational> c;
  c.reserve(2 * z.size());
  for (const auto& x : z) {
    c.push_back(x.real_part());
    c.push_back(x.tau_part());
  }
  return TorusPoint(std::move(c));
}

Integer TorusPoint::denominator() const {
  Integer d = 1;
  for (const auto& c : coords_) d = lcm(d, c.get_den());
  return d;
}

std::string TorusPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += isotriv::to_string(coords_[i]);
  }
  return out + ")";
}

TorusPoint TorusPoint::parse(std::string_view text) {
  std::string s(text);
  for (char& ch : s) {
    if (ch == '(' || ch == ')') ch = ' ';
  }
  std::vector<Rational> coords;
  std::stringstream ss(s);
  std::string field;
  while (std::getline(ss, field, ',')) coords.push_back(parse_rational(field));
  if (coords.empty()) throw std::invalid_argument("empty point");
  return TorusPoint(std::move(coords));
}

std::strong_ordering operator<=>(const TorusPoint& a, const TorusPoint& b) {
  if (auto c = a.coords_.size() <=> b.coords_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

namespace {

void check_holomorphic(CMField field, const IntMatrix& m) {
  const std::size_t d = m.rows() / 2;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Integer& a = m(2 * i, 2 * j);
      const Integer& b = m(2 * i, 2 * j + 1);
      const Integer& c = m(2 * i + 1, 2 * j);
      const Integer& e = m(2 * i + 1, 2 * j + 1);
      bool ok = false;
      switch (field) {
        // Blocks commuting with [[0,-1],[1,0]] are [[p,-q],[q,p]].
        case CMField::Gauss: ok = (e == a && b == -c); break;
        // Blocks commuting with [[0,-1],[1,1]] are [[p,-q],[q,p+q]].
        case CMField::Eisenstein: ok = (e == a + c && b == -c); break;
        case CMField::Rational: ok = (e == a && b == 0 && c == 0); break;
      }
      if (!ok) {
        throw std::invalid_argument("linear part is not holomorphic for the " + field_name(field) +
                                    " field (block " + std::to_string(i) + "," + std::to_string(j) +
                                    ")");
      }
    }
  }
}

}  // namespace

TorusAutomorphism::TorusAutomorphism(CMField field, IntMatrix linear, TorusPoint translation)
    : field_(field), linear_(std::move(linear)), translation_(std::move(translation)) {
  if (linear_.rows() != linear_.cols() || linear_.rows() == 0 || linear_.rows() % 2 != 0) {
    throw std::invalid_argument("linear part must be a nonempty square matrix of even size");
  }
  if (translation_.lattice_dimension() != linear_.rows()) {
    throw std::invalid_argument("translation has " + std::to_string(translation_.lattice_dimension()) +
                                " coordinates, expected " + std::to_string(linear_.rows()));
  }
  const Integer det = linear_.determinant();
  if (det != 1 && det != -1) {
    throw std::invalid_argument("linear part has determinant " + det.get_str() + ", not +-1");
  }
  check_holomorphic(field_, linear_);
}

TorusAutomorphism TorusAutomorphism::identity(CMField field, std::size_t complex_dimension) {
  return TorusAutomorphism(field, IntMatrix::identity(2 * complex_dimension),
                           TorusPoint::zero(2 * complex_dimension));
}

TorusAutomorphism TorusAutomorphism::from_holomorphic(const CMMatrix& a, const TorusPoint& translation) {
  const std::size_t d = a.size();
  IntMatrix m(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const IntMatrix b = multiplication_block(a(i, j));
      for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) m(2 * i + r, 2 * j + c) = b(r, c);
      }
    }
  }
  return TorusAutomorphism(a.field(), std::move(m), translation);
}

bool TorusAutomorphism::is_identity() const {
  return linear_ == IntMatrix::identity(linear_.rows()) &&
         translation_ == TorusPoint::zero(translation_.lattice_dimension());
}

TorusPoint TorusAutomorphism::apply(const TorusPoint& x) const {
  if (x.lattice_dimension() != linear_.cols()) throw std::invalid_argument("point dimension mismatch");
  std::vector<Rational> y = linear_ * x.coords();
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += translation_[i];
  return TorusPoint(std::move(y));
}

TorusAutomorphism TorusAutomorphism::compose(const TorusAutomorphism& first) const {
  if (first.field_ != field_ || first.linear_.rows() != linear_.rows()) {
    throw std::invalid_argument("composing automorphisms of different tori");
  }
  TorusAutomorphism out;
  out.field_ = field_;
  out.linear_ = linear_ * first.linear_;
  out.translation_ = apply(first.translation_);
  return out;
}

TorusAutomorphism TorusAutomorphism::inverse() const {
  TorusAutomorphism out;
  out.field_ = field_;
  out.linear_ = *linear_.unimodular_inverse();
  std::vector<Rational> t = out.linear_ * translation_.coords();
  for (auto& x : t) x = -x;
  out.translation_ = TorusPoint(std::move(t));
  return out;
}

CMMatrix TorusAutomorphism::holomorphic_matrix() const {
  const std::size_t d = complex_dimension();
  CMMatrix a(field_, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Rational p(linear_(2 * i, 2 * j));
      const Rational q = field_ == CMField::Rational ? Rational(0) : Rational(linear_(2 * i + 1, 2 * j));
      a(i, j) = CMNumber(field_, p, q);
    }
  }
  return a;
}

std::strong_ordering operator<=>(const TorusAutomorphism& a, const TorusAutomorphism& b) {
  if (auto c = static_cast<int>(a.field_) <=> static_cast<int>(b.field_); c != 0) return c;
  if (auto c = a.linear_ <=> b.linear_; c != 0) return c;
  return a.translation_ <=> b.translation_;
}

// ---------------------------------------------------------------------------

CongruenceSolution::CongruenceSolution(const IntMatrix& n, const std::vector<Rational>& b) : N_(n), b_(b) {
  if (b.size() != n.rows()) throw std::invalid_argument("right-hand side has the wrong length");
  SmithForm snf = smith_normal_form(n);
  rank_ = snf.rank;
  V_ = snf.V;
  Vinv_ = *snf.V.unimodular_inverse();
  const std::vector<Rational> s = snf.U * b;
  solvable_ = true;
  for (std::size_t i = rank_; i < s.size(); ++i) {
    if (!is_integral(s[i])) solvable_ = false;
  }
  for (std::size_t i = 0; i < rank_; ++i) {
    d_.push_back(snf.invariant(i));
    s_.push_back(frac(s[i]));
  }
}

Integer CongruenceSolution::component_count() const {
  if (!solvable_) return 0;
  Integer c = 1;
  for (const auto& d : d_) c *= d;
  return c;
}

TorusPoint CongruenceSolution::sample(const std::vector<Integer>& digits) const {
  std::vector<Rational> y(V_.cols());
  for (std::size_t i = 0; i < rank_; ++i) y[i] = (s_[i] + Rational(digits[i])) / Rational(d_[i]);
  return TorusPoint(V_ * y);
}

bool CongruenceSolution::contains(const TorusPoint& x) const {
  if (x.lattice_dimension() != N_.cols()) return false;
  std::vector<Rational> r = N_ * x.coords();
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!is_integral(r[i] - b_[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

CongruenceSolution fixed_point_congruence(const TorusAutomorphism& g) {
  IntMatrix n = g.linear() - IntMatrix::identity(g.lattice_dimension());
  std::vector<Rational> b = g.translation().coords();
  for (auto& x : b) x = -x;
  return CongruenceSolution(n, b);
}

}  // namespace

FixedLocus::FixedLocus(const TorusAutomorphism& g) : solution_(fixed_point_congruence(g)) {}

Integer FixedLocus::component_count() const { return solution_.component_count(); }

std::vector<TorusPoint> FixedLocus::isolated_points() const {
  std::vector<TorusPoint> out;
  if (solution_.free_dimension() != 0) return out;
  solution_.for_each_component([&](TorusPoint p) { out.push_back(std::move(p)); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FixedComponent> FixedLocus::components() const {
  std::vector<FixedComponent> out;
  if (solution_.free_dimension() == 0) return out;
  const IntMatrix dirs = solution_.directions();
  solution_.for_each_component([&](TorusPoint p) { out.push_back({dimension(), std::move(p), dirs}); });
  return out;
}

bool FixedLocus::contains(const TorusPoint& x) const { return solution_.solvable() && solution_.contains(x); }

FixedLocus fixed_locus(const TorusAutomorphism& g) { return FixedLocus(g); }

bool splitting_test(const std::vector<Rational>& b) {
  for (const auto& x : b) {
    if (!is_integral(x)) return false;
  }
  return true;
}

}  // namespace isotriv::torus
