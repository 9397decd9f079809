#pragma once

// Singular strata of E^d / G, invariant holomorphic forms, symplectic checks
// and the symplectic-desingularization obstruction.

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isotriv/torus_group.hpp"

namespace isotriv::torus {

/// One G-orbit of fixed components: a component C of Fix(g) for some g != 1,
/// with its generic (pointwise) stabilizer H_C.
struct Stratum {
  /// Complex dimension of C and its complex codimension.
  std::size_t dimension = 0;
  std::size_t transverse_dimension = 0;
  TorusPoint sample;
  /// Lattice directions of C as columns.
  IntMatrix directions;
  /// First element (in group order) with C as a fixed component.
  std::size_t source_element = 0;
  /// Element indices of H_C, ascending.
  std::vector<std::size_t> stabilizer;
  bool cyclic = false;
  /// Elements of H_C whose fixed space has complex codimension 2.
  std::vector<std::size_t> symplectic_reflections;
  bool generated_by_reflections = false;
  /// Some element of H_C is -1 on the transverse slice.
  bool transverse_minus_one = false;
  /// A_{j-1} for a cyclic H_C of order j acting as diag(a, a^-1) on a
  /// two-dimensional slice.
  std::optional<std::string> label;
  std::size_t orbit_size = 0;

  nlohmann::json to_json(const FiniteActionGroup& g) const;
};

struct SingularityInventory {
  /// One entry per G-orbit, in discovery order.
  std::vector<Stratum> strata;
  /// Isolated points with nontrivial stabilizer, by stabilizer order.
  std::map<std::size_t, std::size_t> points_by_stabilizer_order;
  std::map<std::size_t, std::size_t> point_orbits_by_stabilizer_order;
  /// Orbit counts per ADE label.
  std::map<std::string, std::size_t> orbits_by_label;
  std::vector<std::string> notes;

  nlohmann::json to_json(const FiniteActionGroup& g) const;
};

/// Throws std::overflow_error if the torsion denominators are too large for
/// the 64-bit fast path.
SingularityInventory singularity_inventory(const FiniteActionGroup& g);

/// Elements fixing every point of p + span(directions), ascending.
std::vector<std::size_t> generic_stabilizer(const FiniteActionGroup& g, const TorusPoint& p,
                                            const IntMatrix& directions);

/// Dimension of G-invariant holomorphic p-forms on E^d: the group average
/// of tr(Lambda^p A_g).  Throws std::logic_error if the average is not a
/// nonnegative integer.
std::size_t invariant_form_dimension(const FiniteActionGroup& g, std::size_t p);

/// A^T J A == J for J = diag([[0,1],[-1,0]], ...) on coordinate pairs.
bool is_symplectic(const CMMatrix& a);
/// Every generator is symplectic.  Throws std::invalid_argument for odd
/// complex dimension.
bool preserves_symplectic(const FiniteActionGroup& g);

enum class DesingularizationVerdict { Obstructed, Resolvable, Undecided };
std::string verdict_name(DesingularizationVerdict v);

struct ObstructionReport {
  DesingularizationVerdict verdict = DesingularizationVerdict::Undecided;
  std::optional<Stratum> witness;
  std::string reason;

  nlohmann::json to_json(const FiniteActionGroup& g) const;
};

/// OBSTRUCTED when some stratum's stabilizer is not generated by symplectic
/// reflections (no symplectic resolution of the local quotient exists);
/// RESOLVABLE when every stratum has a two-dimensional slice with cyclic
/// stabilizer and, for d > 2, no two fixed components meet; UNDECIDED
/// otherwise.  Throws std::invalid_argument for a non-symplectic action.
ObstructionReport desingularization_obstruction(const FiniteActionGroup& g);
ObstructionReport desingularization_obstruction(const FiniteActionGroup& g, const SingularityInventory& inv);

/// The induced action on the product of the even factors (y_1, ..., y_n).
/// Throws std::invalid_argument when the action does not descend.
FiniteActionGroup base_projection(const FiniteActionGroup& g);

}  // namespace isotriv::torus
