#include "isotriv/kodaira.hpp"

#include <algorithm>
#include <stdexcept>

namespace isotriv::kodaira {
namespace {

KodairaFibre make_row(FibreKind kind, std::string dynkin, int euler, MonodromyPower power) {
  KodairaFibre f;
  f.kind = kind;
  f.dynkin = std::move(dynkin);
  f.euler = euler;
  f.power = power;
  f.monodromy = evaluate(power);
  f.monodromy_order = sl2z::order(f.monodromy);
  return f;
}

constexpr MonodromyPower alpha_pow(int e) { return {MonodromyGenerator::Alpha, e}; }
constexpr MonodromyPower beta_pow(int e) { return {MonodromyGenerator::Beta, e}; }

}  // namespace

bool KodairaFibre::is_starred() const {
  return kind == FibreKind::I0star || kind == FibreKind::IVstar || kind == FibreKind::IIIstar ||
         kind == FibreKind::IIstar;
}

std::string kind_name(FibreKind kind) {
  switch (kind) {
    case FibreKind::I0: return "I0";
    case FibreKind::In: return "In";
    case FibreKind::II: return "II";
    case FibreKind::III: return "III";
    case FibreKind::IV: return "IV";
    case FibreKind::I0star: return "I0star";
    case FibreKind::IVstar: return "IVstar";
    case FibreKind::IIIstar: return "IIIstar";
    case FibreKind::IIstar: return "IIstar";
  }
  return "?";
}

std::string display_name(FibreKind kind) {
  std::string name = kind_name(kind);
  auto pos = name.find("star");
  if (pos != std::string::npos) name.replace(pos, 4, "*");
  return name;
}

FibreKind parse_kind(std::string_view text) {
  static const FibreKind all[] = {FibreKind::I0,     FibreKind::In,     FibreKind::II,
                                  FibreKind::III,    FibreKind::IV,     FibreKind::I0star,
                                  FibreKind::IVstar, FibreKind::IIIstar, FibreKind::IIstar};
  for (FibreKind k : all) {
    if (text == kind_name(k) || text == display_name(k)) return k;
  }
  throw std::invalid_argument("unknown Kodaira type '" + std::string(text) + "'");
}

std::string power_to_string(const MonodromyPower& power) {
  std::string base;
  switch (power.generator) {
    case MonodromyGenerator::None: return power.exponent == 0 ? "I" : "?";
    case MonodromyGenerator::Alpha: base = "alpha"; break;
    case MonodromyGenerator::Beta: base = "beta"; break;
  }
  return power.exponent == 1 ? base : base + "^" + std::to_string(power.exponent);
}

sl2z::UnimodularMatrix evaluate(const MonodromyPower& power) {
  switch (power.generator) {
    case MonodromyGenerator::None: return sl2z::UnimodularMatrix();
    case MonodromyGenerator::Alpha: return sl2z::alpha().pow(power.exponent);
    case MonodromyGenerator::Beta: return sl2z::beta().pow(power.exponent);
  }
  return sl2z::UnimodularMatrix();
}

const KodairaFibre& FibreTable::at(FibreKind kind) const {
  auto it = std::find_if(rows.begin(), rows.end(), [kind](const auto& r) { return r.kind == kind; });
  if (it == rows.end()) throw std::out_of_range("no table row for " + display_name(kind));
  return *it;
}

const FibreTable& standard_table() {
  static const FibreTable table{{
      make_row(FibreKind::II, "~A0", 2, alpha_pow(1)),
      make_row(FibreKind::III, "~A1", 3, beta_pow(1)),
      make_row(FibreKind::IV, "~A2", 4, alpha_pow(2)),
      make_row(FibreKind::I0star, "~D4", 6, alpha_pow(3)),
      make_row(FibreKind::IIstar, "~E8", 10, alpha_pow(5)),
      make_row(FibreKind::IIIstar, "~E7", 9, beta_pow(3)),
      make_row(FibreKind::IVstar, "~E6", 8, alpha_pow(4)),
  }};
  return table;
}

KodairaFibre fibre_for(FibreKind kind) {
  if (kind == FibreKind::I0) return make_row(FibreKind::I0, "", 0, MonodromyPower{});
  if (kind == FibreKind::In) {
    throw std::invalid_argument("I_k needs a cycle length; use semistable_fibre(k)");
  }
  return standard_table().at(kind);
}

KodairaFibre fibre_for(std::string_view kind) { return fibre_for(parse_kind(kind)); }

KodairaFibre semistable_fibre(unsigned k) {
  if (k == 0) return fibre_for(FibreKind::I0);
  KodairaFibre f;
  f.kind = FibreKind::In;
  f.cycle_length = k;
  f.dynkin = "~A" + std::to_string(k - 1);
  f.euler = static_cast<int>(k);
  f.monodromy = sl2z::UnimodularMatrix(1, k, 0, 1);
  f.monodromy_order = sl2z::order(f.monodromy);
  return f;
}

std::vector<KodairaFibre> starred_types() {
  const auto& t = standard_table();
  return {t.at(FibreKind::I0star), t.at(FibreKind::IVstar), t.at(FibreKind::IIIstar),
          t.at(FibreKind::IIstar)};
}

nlohmann::json table_json(const FibreTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : table.rows) {
    nlohmann::json row;
    row["Kodaira type"] = kind_name(r.kind);
    row["Dynkin diagram"] = r.dynkin;
    row["Euler number"] = r.euler;
    row["monodromy"] = power_to_string(r.power);
    row["monodromy matrix"] = r.monodromy.to_string();
    row["order"] = sl2z::order_to_string(r.monodromy_order);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace isotriv::kodaira
