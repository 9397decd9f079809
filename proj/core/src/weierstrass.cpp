#include "isotriv/weierstrass.hpp"

#include <algorithm>
#include <sstream>

namespace isotriv::weierstrass {

using kodaira::FibreKind;
using kodaira::MonodromyGenerator;
using kodaira::MonodromyPower;

std::string j_case_name(JCase j) {
  switch (j) {
    case JCase::Zero: return "0";
    case JCase::J1728: return "1728";
    case JCase::Generic: return "generic";
  }
  return "?";
}

JCase parse_j_case(std::string_view text) {
  if (text == "0" || text == "zero") return JCase::Zero;
  if (text == "1728") return JCase::J1728;
  if (text == "generic") return JCase::Generic;
  throw std::invalid_argument("unknown j-case '" + std::string(text) + "' (expected 0, 1728 or generic)");
}

unsigned bundle_degree(JCase j) {
  switch (j) {
    case JCase::Zero: return 12;
    case JCase::J1728: return 8;
    case JCase::Generic: break;
  }
  throw std::invalid_argument("the generic j-case has no Weierstrass coefficient bundle");
}

unsigned max_zero_order(JCase j) {
  switch (j) {
    case JCase::Zero: return 5;
    case JCase::J1728: return 3;
    case JCase::Generic: break;
  }
  throw std::invalid_argument("the generic j-case has no zero-order bound");
}

unsigned ZeroProfile::total() const {
  unsigned t = infinity_multiplicity;
  for (auto [m, count] : finite_zeros) t += m * count;
  return t;
}

std::vector<unsigned> ZeroProfile::multiplicities() const {
  std::vector<unsigned> out;
  for (auto [m, count] : finite_zeros) out.insert(out.end(), count, m);
  if (infinity_multiplicity > 0) out.push_back(infinity_multiplicity);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string ZeroProfile::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto it = finite_zeros.rbegin(); it != finite_zeros.rend(); ++it) {
    if (!first) os << ", ";
    first = false;
    os << it->first << ":" << it->second;
  }
  os << "}";
  if (infinity_multiplicity > 0) os << " + infinity:" << infinity_multiplicity;
  return os.str();
}

ZeroProfile multiplicity_profile(const RationalPolynomial& p, unsigned bundle_degree) {
  if (p.is_zero()) {
    throw WrongJCase("coefficient vanishes identically: the surface belongs to the other j-case");
  }
  if (p.degree() > static_cast<int>(bundle_degree)) {
    throw std::invalid_argument("polynomial of degree " + std::to_string(p.degree()) +
                                " is not a section of O(" + std::to_string(bundle_degree) + ")");
  }
  ZeroProfile profile;
  const auto factors = square_free_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() > 0) {
      profile.finite_zeros[static_cast<unsigned>(i + 1)] = static_cast<unsigned>(factors[i].degree());
    }
  }
  profile.infinity_multiplicity = bundle_degree - static_cast<unsigned>(p.degree());
  return profile;
}

std::string ade_name(AdeLabel label) {
  switch (label) {
    case AdeLabel::A1: return "A1";
    case AdeLabel::A2: return "A2";
    case AdeLabel::D4: return "D4";
    case AdeLabel::E6: return "E6";
    case AdeLabel::E7: return "E7";
    case AdeLabel::E8: return "E8";
  }
  return "?";
}

ZeroClassification classify_zero(JCase j, unsigned m) {
  if (m == 0) throw std::invalid_argument("zero order must be positive");
  if (j == JCase::Generic) throw std::invalid_argument("zero orders are only meaningful for j = 0 or 1728");
  if (m > max_zero_order(j)) {
    throw NotRationalDoublePoint(
        "zero of order " + std::to_string(m) +
        (j == JCase::Zero ? " (order six or greater)" : " (order four or greater)") +
        " is worse than a rational double point");
  }
  using Row = ZeroClassification;
  if (j == JCase::Zero) {
    static const Row rows[] = {
        {FibreKind::II, 2, {MonodromyGenerator::Alpha, 1}, std::nullopt},
        {FibreKind::IV, 4, {MonodromyGenerator::Alpha, 2}, AdeLabel::A2},
        {FibreKind::I0star, 6, {MonodromyGenerator::Alpha, 3}, AdeLabel::D4},
        {FibreKind::IVstar, 8, {MonodromyGenerator::Alpha, 4}, AdeLabel::E6},
        {FibreKind::IIstar, 10, {MonodromyGenerator::Alpha, 5}, AdeLabel::E8},
    };
    return rows[m - 1];
  }
  static const Row rows[] = {
      {FibreKind::III, 3, {MonodromyGenerator::Beta, 1}, AdeLabel::A1},
      {FibreKind::I0star, 6, {MonodromyGenerator::Beta, 2}, AdeLabel::D4},
      {FibreKind::IIIstar, 9, {MonodromyGenerator::Beta, 3}, AdeLabel::E7},
  };
  return rows[m - 1];
}

namespace {

std::string bound_phrase(JCase j) {
  return j == JCase::Zero ? "order six or greater" : "order four or greater";
}

void add_zero(IsotrivialK3Report& report, JCase j, unsigned m, unsigned count,
              const std::string& where) {
  try {
    auto z = classify_zero(j, m);
    report.fibres[z.kind] += count;
    if (z.singularity) report.local_singularities[*z.singularity] += count;
    report.euler_total += z.euler * static_cast<int>(count);
  } catch (const NotRationalDoublePoint&) {
    report.reasons.push_back("zero of order " + std::to_string(m) + " " + where + ": " +
                             bound_phrase(j) + " is worse than a rational double point");
  }
}

}  // namespace

IsotrivialK3Report classify_surface(JCase j, const RationalPolynomial& p) {
  if (j == JCase::Generic) return generic_report();
  IsotrivialK3Report report;
  report.j_case = j;
  const unsigned bundle = bundle_degree(j);
  if (p.is_zero()) {
    report.reasons.push_back(std::string(j == JCase::Zero ? "b" : "a") +
                             "(t) vanishes identically: wrong j-case");
    return report;
  }
  if (p.degree() > static_cast<int>(bundle)) {
    report.reasons.push_back("degree " + std::to_string(p.degree()) + " exceeds the bundle degree " +
                             std::to_string(bundle));
    return report;
  }

  report.profile = multiplicity_profile(p, bundle);
  const auto factors = square_free_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    if (f.degree() <= 0) continue;
    std::string where;
    if (f.degree() == 1) {
      where = "at t=" + to_string(-f.coefficient(0) / f.coefficient(1));
    } else {
      where = "at each root of " + f.to_string();
    }
    add_zero(report, j, static_cast<unsigned>(i + 1), static_cast<unsigned>(f.degree()), where);
  }
  if (report.profile->infinity_multiplicity > 0) {
    add_zero(report, j, report.profile->infinity_multiplicity, 1, "at t=infinity");
  }
  report.valid_k3 = report.reasons.empty() && report.euler_total == 24;
  if (report.reasons.empty() && report.euler_total != 24) {
    report.reasons.push_back("Euler numbers sum to " + std::to_string(report.euler_total));
  }
  return report;
}

IsotrivialK3Report generic_report() {
  IsotrivialK3Report report;
  report.j_case = JCase::Generic;
  report.fibres[FibreKind::I0star] = 4;
  report.local_singularities[AdeLabel::D4] = 4;
  report.euler_total = 24;
  report.valid_k3 = true;
  return report;
}

nlohmann::json IsotrivialK3Report::to_json() const {
  nlohmann::json out;
  out["j_case"] = j_case_name(j_case);
  if (profile) {
    nlohmann::json finite = nlohmann::json::array();
    for (auto it = profile->finite_zeros.rbegin(); it != profile->finite_zeros.rend(); ++it) {
      finite.push_back({{"multiplicity", it->first}, {"count", it->second}});
    }
    out["profile"] = {{"finite_zeros", finite}, {"infinity_multiplicity", profile->infinity_multiplicity}};
  }
  // Fibres and the Euler ledger in decreasing Euler number.
  std::vector<std::pair<kodaira::FibreKind, unsigned>> sorted(fibres.begin(), fibres.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    return kodaira::fibre_for(x.first).euler > kodaira::fibre_for(y.first).euler;
  });
  nlohmann::json fj = nlohmann::json::array();
  std::string ledger;
  for (const auto& [kind, count] : sorted) {
    fj.push_back({{"type", kodaira::kind_name(kind)}, {"count", count}});
    for (unsigned i = 0; i < count; ++i) {
      if (!ledger.empty()) ledger += " + ";
      ledger += std::to_string(kodaira::fibre_for(kind).euler);
    }
  }
  out["fibres"] = fj;
  nlohmann::json sj = nlohmann::json::array();
  for (const auto& [label, count] : local_singularities) {
    sj.push_back({{"type", ade_name(label)}, {"count", count}});
  }
  out["local_singularities"] = sj;
  out["euler_ledger"] = ledger.empty() ? "0" : ledger;
  out["euler_total"] = euler_total;
  out["valid_k3"] = valid_k3;
  out["reasons"] = reasons;
  return out;
}

std::string j_constancy_name(JConstancy c) {
  switch (c) {
    case JConstancy::Constant0: return "constant-0";
    case JConstancy::Constant1728: return "constant-1728";
    case JConstancy::ConstantOther: return "constant-other";
    case JConstancy::NonConstant: return "non-constant";
  }
  return "?";
}

JInvariantResult j_invariant_constancy(const RationalPolynomial& a, const RationalPolynomial& b) {
  const RationalPolynomial four_a3 = a.pow(3) * Rational(4);
  const RationalPolynomial disc = four_a3 + b.pow(2) * Rational(27);
  if (disc.is_zero()) throw NotEllipticFibration("4a^3 + 27b^2 vanishes identically");
  if (a.is_zero()) return {JConstancy::Constant0, Rational(0)};
  if (b.is_zero()) return {JConstancy::Constant1728, Rational(1728)};

  // Reference point t0 with disc(t0) != 0: 0, 1, -1, 2, -2, ...
  Rational t0 = 0;
  for (long k = 1; disc(t0) == 0; ++k) t0 = (k % 2 == 1) ? Rational((k + 1) / 2) : Rational(-(k / 2));
  const Rational n0 = four_a3(t0), d0 = disc(t0);
  // j(t) == j(t0)  <=>  4a^3(t) * disc(t0) - disc(t) * 4a^3(t0) == 0.
  const RationalPolynomial diff = four_a3 * d0 - disc * n0;
  if (!diff.is_zero()) return {JConstancy::NonConstant, std::nullopt};
  Rational value = Rational(1728) * n0 / d0;
  if (value == 0) return {JConstancy::Constant0, value};
  if (value == 1728) return {JConstancy::Constant1728, value};
  return {JConstancy::ConstantOther, value};
}

}  // namespace isotriv::weierstrass
