#pragma once

// Finite groups of torus automorphisms, closed under composition, and the
// built-in actions on products of CM elliptic curves.

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "isotriv/torus.hpp"

namespace isotriv::torus {

inline constexpr std::size_t kDefaultOrderCap = 10000;

class OrderCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct NamedGenerator {
  std::string name;
  TorusAutomorphism map;
};

class FiniteActionGroup {
 public:
  /// Breadth-first closure under right multiplication by the generators.
  /// Throws OrderCapExceeded when more than order_cap elements appear.
  FiniteActionGroup(CMField field, std::size_t complex_dimension, std::vector<NamedGenerator> generators,
                    std::string name = "", std::size_t order_cap = kDefaultOrderCap);

  CMField field() const { return field_; }
  std::size_t complex_dimension() const { return dimension_; }
  const std::string& name() const { return name_; }
  const std::vector<NamedGenerator>& generators() const { return generators_; }

  std::size_t order() const { return elements_.size(); }
  /// Element 0 is the identity; the rest in discovery order.
  const std::vector<TorusAutomorphism>& elements() const { return elements_; }
  const TorusAutomorphism& element(std::size_t i) const { return elements_[i]; }
  /// Shortest word in discovery order, "id" or "gamma1*gamma2" (= gamma1 o gamma2).
  const std::string& word(std::size_t i) const { return words_[i]; }

  std::optional<std::size_t> index_of(const TorusAutomorphism& g) const;
  /// Index of element(i) o element(j).
  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t inverse_index(std::size_t i) const;
  unsigned element_order(std::size_t i) const;

  /// Composes named generators; "id" is the identity.  Throws
  /// std::invalid_argument for an unknown name.
  TorusAutomorphism evaluate_word(std::string_view word) const;

  /// {"name", "field", "complex_dimension", "generators": [{"name",
  /// "linear", "translation"}]}.
  nlohmann::json to_json() const;
  static FiniteActionGroup from_json(const nlohmann::json& j, std::size_t order_cap = kDefaultOrderCap);

 private:
  CMField field_;
  std::size_t dimension_;
  std::string name_;
  std::vector<NamedGenerator> generators_;
  std::vector<TorusAutomorphism> elements_;
  std::vector<std::string> words_;
  std::map<TorusAutomorphism, std::size_t> index_;
};

/// diag(a, a^-1) on E^2 with a of order k in {2, 3, 4, 6}: a = -1, zeta^2,
/// i, zeta.  k = 3, 6 need the Eisenstein field and k = 4 the Gauss field;
/// k = 2 works over any field (Gauss by default).
FiniteActionGroup cyclic_surface(unsigned k, std::optional<CMField> field = std::nullopt,
                                 std::size_t order_cap = kDefaultOrderCap);

/// G^n x| S_n on E^{2n}: diag(a, a^-1) on each coordinate pair (x_i, y_i)
/// and the adjacent transpositions of pairs.  Order k^n n!.
FiniteActionGroup hilbert_action(unsigned k, unsigned n, std::optional<CMField> field = std::nullopt,
                                 std::size_t order_cap = kDefaultOrderCap);

/// (Z/2)^n x| S_n on E^{2n}: gamma_i is -1 on the pair (x_i, y_i) and adds
/// the 2-torsion point to every other x_j; plus the adjacent transpositions.
/// torsion is in lattice coordinates and must be a nonzero 2-torsion point.
FiniteActionGroup translated_action(unsigned n, const std::vector<Rational>& torsion = {Rational(1, 2), 0},
                                    std::optional<CMField> field = std::nullopt,
                                    std::size_t order_cap = kDefaultOrderCap);

/// The subgroup of hilbert_action(k, n) of elements (a_1, ..., a_n) with
/// a_1 ... a_n = 1 and even permutations; generated by (a at pair i, a^-1 at
/// pair i+1) and the 3-cycles (1 2 i).  Order k^{n-1} n!/2.
FiniteActionGroup matsushita_action(unsigned k, unsigned n, std::optional<CMField> field = std::nullopt,
                                    std::size_t order_cap = kDefaultOrderCap);

struct BuiltinOptions {
  std::optional<CMField> field;
  std::vector<Rational> torsion{Rational(1, 2), 0};
  std::size_t order_cap = kDefaultOrderCap;
};

/// "cyclic-surface:4", "hilbert:3,2" (k, n), "translated:3" (n),
/// "matsushita:6,3" (k, n).
FiniteActionGroup builtin_action(std::string_view spec, const BuiltinOptions& options = {});

/// Names accepted by builtin_action, for help text.
std::vector<std::string> builtin_action_families();

}  // namespace isotriv::torus
