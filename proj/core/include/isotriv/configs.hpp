#pragma once

// Singular-fibre configurations of isotrivial elliptic K3 surfaces.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "isotriv/kodaira.hpp"
#include "isotriv/sl2z.hpp"
#include "isotriv/weierstrass.hpp"

namespace isotriv::configs {

using kodaira::FibreKind;
using weierstrass::JCase;

struct FibreCount {
  FibreKind kind;
  unsigned count;

  friend bool operator==(const FibreCount&, const FibreCount&) = default;
};

/// A multiset of finite-monodromy fibres, kept in canonical order
/// (decreasing Euler number, equal kinds merged).
class FibreConfiguration {
 public:
  /// Throws std::invalid_argument if a kind has infinite monodromy or a count
  /// is zero.
  FibreConfiguration(JCase j_case, const std::vector<FibreCount>& fibres);

  JCase j_case() const { return j_case_; }
  const std::vector<FibreCount>& fibres() const { return fibres_; }
  unsigned fibre_count() const;
  /// Sum of Euler numbers looked up in the Kodaira table.
  int euler_sum() const;
  /// "10 + 8 + 6".
  std::string euler_ledger() const;
  bool all_starred() const;
  std::string to_string() const;
  /// [{"type": "IVstar", "count": 3}, ...]
  nlohmann::json to_json() const;

  friend bool operator==(const FibreConfiguration&, const FibreConfiguration&) = default;

 private:
  JCase j_case_;
  std::vector<FibreCount> fibres_;
};

/// All configurations of starred fibres with Euler sum 24, found by
/// partitioning 24 into parts from {10, 9, 8, 6} in decreasing order.
std::vector<FibreConfiguration> enumerate_starred();

/// All zero profiles for the j-case: partitions of 12 with parts <= 5
/// (j = 0) or of 8 with parts <= 3 (j = 1728), decreasing parts, as finite
/// zeros only.  Throws std::invalid_argument for JCase::Generic.
std::vector<weierstrass::ZeroProfile> enumerate_profiles(JCase j);

/// Coefficient polynomial realizing the profile with roots at 0, 1, 2, ...
/// and a zero at infinity of the profile's infinity multiplicity.
weierstrass::RationalPolynomial realize_profile(const weierstrass::ZeroProfile& profile,
                                                unsigned bundle_degree);

/// Fibre configuration produced by the profile through the zero tables.
FibreConfiguration configuration_for_profile(JCase j, const weierstrass::ZeroProfile& profile);

inline constexpr std::size_t kDefaultRigidityWordLength = 6;

struct ForcedMonodromy {
  FibreKind kind;
  sl2z::UnimodularMatrix monodromy;
};

struct RigidityReport {
  FibreConfiguration configuration;
  /// Completeness horizon: conjugators longer than this were not searched.
  std::size_t word_length;
  /// Classes in product order; the first is fixed by the choice of basis.
  std::vector<FibreKind> order;
  std::vector<sl2z::RigiditySolution> solutions;
  /// Exactly one conjugate tuple solves the product relation.
  bool forced = false;
  std::vector<ForcedMonodromy> forced_monodromies;
  /// Order of the group generated by the forced monodromies (0 if not forced).
  std::size_t monodromy_group_order = 0;

  nlohmann::json to_json() const;
};

/// Runs the bounded rigidity search for one of the four starred
/// configurations.  Throws std::invalid_argument for anything else.
RigidityReport rigid_configuration_check(const FibreConfiguration& config,
                                         std::size_t word_length = kDefaultRigidityWordLength);

enum class MonodromyVerdict { NecessaryConditionsPass, EulerSumFails, ExponentSumFails, MixedFamilies };
std::string verdict_name(MonodromyVerdict v);

struct NecessaryConditionReport {
  MonodromyVerdict verdict;
  int euler_sum;
  /// Sum of alpha (j = 0) or beta (j = 1728) exponents, and its modulus.
  int exponent_sum;
  int modulus;
};

/// Euler sum 24 and vanishing of the total monodromy exponent modulo 6 (alpha
/// family) or 4 (beta family).  Whether a literal trivial-product assignment
/// of conjugates exists is not decided.
NecessaryConditionReport necessary_conditions(const FibreConfiguration& config);

}  // namespace isotriv::configs
