#pragma once

// Kodaira fibre types with finite monodromy, plus the smooth fibre I0 and the
// semistable I_k types (infinite monodromy) for completeness.

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "isotriv/sl2z.hpp"

namespace isotriv::kodaira {

enum class FibreKind { I0, In, II, III, IV, I0star, IVstar, IIIstar, IIstar };

/// Which generator the monodromy representative is a power of.
enum class MonodromyGenerator { None, Alpha, Beta };

struct MonodromyPower {
  MonodromyGenerator generator = MonodromyGenerator::None;
  int exponent = 0;

  friend bool operator==(const MonodromyPower&, const MonodromyPower&) = default;
};

struct KodairaFibre {
  FibreKind kind = FibreKind::I0;
  /// k for I_k; zero otherwise.
  unsigned cycle_length = 0;
  std::string dynkin;
  int euler = 0;
  sl2z::UnimodularMatrix monodromy;
  MonodromyPower power;
  sl2z::Order monodromy_order;

  bool has_finite_monodromy() const { return monodromy_order.has_value(); }
  bool is_starred() const;
};

/// Identifier used in files and on the command line ("IVstar", "I0", "In").
std::string kind_name(FibreKind kind);
/// Typeset name ("IV*", "I0*").
std::string display_name(FibreKind kind);
/// Accepts kind_name() spellings and the starred display names.
/// Throws std::invalid_argument for an unknown kind.
FibreKind parse_kind(std::string_view text);

/// "alpha^4", "beta", "-I", "I" ...
std::string power_to_string(const MonodromyPower& power);
sl2z::UnimodularMatrix evaluate(const MonodromyPower& power);

/// Rows of the finite-monodromy table, as a value so it can be inspected or
/// altered (the verifier takes a table argument).
struct FibreTable {
  std::vector<KodairaFibre> rows;

  /// Throws std::out_of_range when the kind is absent.
  const KodairaFibre& at(FibreKind kind) const;
};

/// The seven finite-monodromy singular fibres in the order II, III, IV, I0*,
/// II*, III*, IV*.
const FibreTable& standard_table();

/// Row for a finite-monodromy kind, or the smooth fibre for I0.  Throws
/// std::invalid_argument for In (use semistable_fibre).
KodairaFibre fibre_for(FibreKind kind);
KodairaFibre fibre_for(std::string_view kind);

/// I_k: Euler number k, monodromy [[1,k],[0,1]], infinite order (k >= 1).
KodairaFibre semistable_fibre(unsigned k);

/// I0*, IV*, III*, II* (increasing Euler number 6, 8, 9, 10).
std::vector<KodairaFibre> starred_types();

/// JSON rows keyed "Kodaira type", "Dynkin diagram", "Euler number",
/// "monodromy", "order".
nlohmann::json table_json(const FibreTable& table);

}  // namespace isotriv::kodaira
