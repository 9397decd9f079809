#pragma once

// Isotrivial elliptic K3 surfaces with a section, in Weierstrass form.
//
//   j = 0     :  y^2 = x^3 + b(t),   b a section of O(12)
//   j = 1728  :  y^2 = x^3 + a(t) x, a a section of O(8)
//
// A zero of order m (counting t = infinity through the degree deficit)
// gives one singular fibre; the tables below are the only possibilities
// with rational double points on the Weierstrass model.

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "isotriv/kodaira.hpp"
#include "isotriv/polynomial.hpp"

namespace isotriv::weierstrass {

enum class JCase { Zero, J1728, Generic };

std::string j_case_name(JCase j);
/// Accepts "0", "zero", "1728", "generic".
JCase parse_j_case(std::string_view text);

/// 12 for j = 0, 8 for j = 1728; throws std::invalid_argument for Generic.
unsigned bundle_degree(JCase j);
/// Largest admissible zero order: 5 for j = 0, 3 for j = 1728.
unsigned max_zero_order(JCase j);

/// The polynomial vanishes identically, so the surface belongs to the other
/// j-case (or is not an elliptic fibration).
class WrongJCase : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A zero of order >= 6 (j = 0) or >= 4 (j = 1728): the Weierstrass model has
/// a singularity worse than a rational double point.
class NotRationalDoublePoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotEllipticFibration : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ZeroProfile {
  /// multiplicity -> number of distinct finite roots with that multiplicity.
  std::map<unsigned, unsigned> finite_zeros;
  unsigned infinity_multiplicity = 0;

  /// Sum of multiplicity * count, plus the multiplicity at infinity.
  unsigned total() const;
  /// Every zero (infinity included when nonzero) as a multiplicity, sorted
  /// in decreasing order.
  std::vector<unsigned> multiplicities() const;
  std::string to_string() const;

  friend bool operator==(const ZeroProfile&, const ZeroProfile&) = default;
};

/// Root-multiplicity structure of p as a section of O(bundle_degree), from
/// the square-free decomposition (no root finding).
/// Throws WrongJCase for p == 0 and std::invalid_argument when
/// deg p > bundle_degree.
ZeroProfile multiplicity_profile(const RationalPolynomial& p, unsigned bundle_degree);

enum class AdeLabel { A1, A2, D4, E6, E7, E8 };
std::string ade_name(AdeLabel label);

struct ZeroClassification {
  kodaira::FibreKind kind;
  int euler;
  kodaira::MonodromyPower monodromy;
  /// Singularity of the Weierstrass surface; nullopt when smooth.
  std::optional<AdeLabel> singularity;
};

/// Fibre produced by a zero of order m.  Throws NotRationalDoublePoint when
/// m exceeds max_zero_order(j) and std::invalid_argument for m == 0 or the
/// generic case.
ZeroClassification classify_zero(JCase j, unsigned m);

struct IsotrivialK3Report {
  JCase j_case = JCase::Zero;
  std::optional<ZeroProfile> profile;
  std::map<kodaira::FibreKind, unsigned> fibres;
  std::map<AdeLabel, unsigned> local_singularities;
  /// Sum of Euler numbers over the classifiable zeros.
  int euler_total = 0;
  bool valid_k3 = false;
  std::vector<std::string> reasons;

  nlohmann::json to_json() const;
};

/// Never throws on bad data: every problem becomes valid_k3 = false with a
/// reason.  JCase::Generic returns generic_report().
IsotrivialK3Report classify_surface(JCase j, const RationalPolynomial& p);

/// Constant j outside {0, 1728}: four I0* fibres (four D4 points).
IsotrivialK3Report generic_report();

enum class JConstancy { Constant0, Constant1728, ConstantOther, NonConstant };
std::string j_constancy_name(JConstancy c);

struct JInvariantResult {
  JConstancy kind;
  /// The constant value when j is constant.
  std::optional<Rational> value;
};

/// Decides whether 1728 * 4a^3 / (4a^3 + 27b^2) is constant in t.  Throws
/// NotEllipticFibration when the discriminant vanishes identically.
JInvariantResult j_invariant_constancy(const RationalPolynomial& a, const RationalPolynomial& b);

}  // namespace isotriv::weierstrass
