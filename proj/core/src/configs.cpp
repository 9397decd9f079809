#include "isotriv/configs.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace isotriv::configs {

namespace {

int euler_of(FibreKind kind) { return kodaira::fibre_for(kind).euler; }

bool is_beta_family(FibreKind k) { return k == FibreKind::III || k == FibreKind::IIIstar; }
bool is_alpha_family(FibreKind k) {
  return k == FibreKind::II || k == FibreKind::IV || k == FibreKind::IVstar || k == FibreKind::IIstar;
}

JCase infer_j_case(const std::vector<FibreCount>& fibres) {
  for (const auto& f : fibres) {
    if (is_alpha_family(f.kind)) return JCase::Zero;
    if (is_beta_family(f.kind)) return JCase::J1728;
  }
  return JCase::Generic;
}

}  // namespace

FibreConfiguration::FibreConfiguration(JCase j_case, const std::vector<FibreCount>& fibres)
    : j_case_(j_case) {
  for (const auto& f : fibres) {
    if (f.kind == FibreKind::In || f.kind == FibreKind::I0) {
      throw std::invalid_argument("configurations hold singular fibres with finite monodromy, not " +
                                  kodaira::display_name(f.kind));
    }
    if (f.count == 0) throw std::invalid_argument("fibre counts must be positive");
    auto it = std::find_if(fibres_.begin(), fibres_.end(), [&](const auto& g) { return g.kind == f.kind; });
    if (it == fibres_.end()) {
      fibres_.push_back(f);
    } else {
      it->count += f.count;
    }
  }
  std::stable_sort(fibres_.begin(), fibres_.end(), [](const FibreCount& x, const FibreCount& y) {
    int ex = euler_of(x.kind), ey = euler_of(y.kind);
    return ex != ey ? ex > ey : static_cast<int>(x.kind) < static_cast<int>(y.kind);
  });
}

unsigned FibreConfiguration::fibre_count() const {
  unsigned n = 0;
  for (const auto& f : fibres_) n += f.count;
  return n;
}

int FibreConfiguration::euler_sum() const {
  int s = 0;
  for (const auto& f : fibres_) s += euler_of(f.kind) * static_cast<int>(f.count);
  return s;
}

std::string FibreConfiguration::euler_ledger() const {
  std::string out;
  for (const auto& f : fibres_) {
    for (unsigned i = 0; i < f.count; ++i) {
      if (!out.empty()) out += " + ";
      out += std::to_string(euler_of(f.kind));
    }
  }
  return out;
}

bool FibreConfiguration::all_starred() const {
  return std::all_of(fibres_.begin(), fibres_.end(),
                     [](const auto& f) { return kodaira::fibre_for(f.kind).is_starred(); });
}

std::string FibreConfiguration::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < fibres_.size(); ++i) {
    if (i) os << ", ";
    os << kodaira::display_name(fibres_[i].kind) << " x" << fibres_[i].count;
  }
  os << "}";
  return os.str();
}

nlohmann::json FibreConfiguration::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& f : fibres_) out.push_back({{"type", kodaira::kind_name(f.kind)}, {"count", f.count}});
  return out;
}

std::vector<FibreConfiguration> enumerate_starred() {
  std::vector<kodaira::KodairaFibre> parts = kodaira::starred_types();
  std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) { return x.euler > y.euler; });

  std::vector<FibreConfiguration> out;
  std::vector<FibreCount> current;
  std::function<void(int, std::size_t)> rec = [&](int remaining, std::size_t first_part) {
    if (remaining == 0) {
      out.emplace_back(infer_j_case(current), current);
      return;
    }
    for (std::size_t i = first_part; i < parts.size(); ++i) {
      if (parts[i].euler > remaining) continue;
      current.push_back({parts[i].kind, 1});
      rec(remaining - parts[i].euler, i);
      current.pop_back();
    }
  };
  rec(24, 0);
  return out;
}

std::vector<weierstrass::ZeroProfile> enumerate_profiles(JCase j) {
  const unsigned total = weierstrass::bundle_degree(j);
  const unsigned max_part = weierstrass::max_zero_order(j);
  std::vector<weierstrass::ZeroProfile> out;
  std::vector<unsigned> parts;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned largest) {
    if (remaining == 0) {
      weierstrass::ZeroProfile p;
      for (unsigned m : parts) p.finite_zeros[m] += 1;
      out.push_back(std::move(p));
      return;
    }
    for (unsigned m = std::min(largest, remaining); m >= 1; --m) {
      parts.push_back(m);
      rec(remaining - m, m);
      parts.pop_back();
    }
  };
  rec(total, max_part);
  return out;
}

weierstrass::RationalPolynomial realize_profile(const weierstrass::ZeroProfile& profile,
                                                unsigned bundle_degree) {
  if (profile.total() != bundle_degree) {
    throw std::invalid_argument("profile " + profile.to_string() + " does not have total multiplicity " +
                                std::to_string(bundle_degree));
  }
  std::vector<std::pair<Rational, unsigned>> roots;
  long next_root = 0;
  for (auto it = profile.finite_zeros.rbegin(); it != profile.finite_zeros.rend(); ++it) {
    for (unsigned c = 0; c < it->second; ++c) roots.emplace_back(Rational(next_root++), it->first);
  }
  return weierstrass::RationalPolynomial::from_roots(roots);
}

FibreConfiguration configuration_for_profile(JCase j, const weierstrass::ZeroProfile& profile) {
  std::vector<FibreCount> fibres;
  for (unsigned m : profile.multiplicities()) fibres.push_back({weierstrass::classify_zero(j, m).kind, 1});
  return FibreConfiguration(j, fibres);
}

// ---------------------------------------------------------------------------

RigidityReport rigid_configuration_check(const FibreConfiguration& config, std::size_t word_length) {
  const auto starred = enumerate_starred();
  const bool supported = std::any_of(starred.begin(), starred.end(), [&](const FibreConfiguration& c) {
    return c.fibres() == config.fibres();
  });
  if (!supported) {
    throw std::invalid_argument("rigidity check is only supported for the starred configurations, not " +
                                config.to_string());
  }

  // Product order: the largest fibre first, then the I0* fibres, then the
  // rest; the first monodromy is fixed by the choice of basis.
  std::vector<FibreKind> flat;
  for (const auto& f : config.fibres()) flat.insert(flat.end(), f.count, f.kind);
  std::vector<FibreKind> order{flat.front()};
  for (std::size_t i = 1; i < flat.size(); ++i) {
    if (flat[i] == FibreKind::I0star) order.push_back(flat[i]);
  }
  for (std::size_t i = 1; i < flat.size(); ++i) {
    if (flat[i] != FibreKind::I0star) order.push_back(flat[i]);
  }

  std::vector<sl2z::UnimodularMatrix> classes;
  for (FibreKind k : order) classes.push_back(kodaira::fibre_for(k).monodromy);

  RigidityReport report{config, word_length, order, sl2z::rigidity_search(classes, word_length), false, {}, 0};
  report.forced = report.solutions.size() == 1;
  if (report.forced) {
    const auto& conj = report.solutions.front().conjugates;
    for (std::size_t i = 0; i < order.size(); ++i) report.forced_monodromies.push_back({order[i], conj[i]});
    report.monodromy_group_order = sl2z::generated_group_order(conj);
  }
  return report;
}

nlohmann::json RigidityReport::to_json() const {
  nlohmann::json out;
  out["configuration"] = configuration.to_json();
  out["euler_ledger"] = configuration.euler_ledger();
  out["word_length"] = word_length;
  nlohmann::json ord = nlohmann::json::array();
  for (auto k : order) ord.push_back(kodaira::kind_name(k));
  out["product_order"] = ord;
  nlohmann::json sols = nlohmann::json::array();
  for (const auto& s : solutions) {
    nlohmann::json js;
    nlohmann::json words = nlohmann::json::array(), mats = nlohmann::json::array();
    for (const auto& w : s.conjugators) words.push_back(w.display());
    for (const auto& m : s.conjugates) mats.push_back(m.to_string());
    js["conjugators"] = words;
    js["conjugates"] = mats;
    js["raw_tuple_count"] = s.raw_tuple_count.get_str();
    sols.push_back(js);
  }
  out["solutions"] = sols;
  out["forced"] = forced;
  nlohmann::json forced_json = nlohmann::json::array();
  for (const auto& f : forced_monodromies) {
    forced_json.push_back({{"type", kodaira::kind_name(f.kind)}, {"monodromy", f.monodromy.to_string()}});
  }
  out["forced_monodromies"] = forced_json;
  out["monodromy_group_order"] = monodromy_group_order;
  return out;
}

std::string verdict_name(MonodromyVerdict v) {
  switch (v) {
    case MonodromyVerdict::NecessaryConditionsPass: return "necessary conditions pass";
    case MonodromyVerdict::EulerSumFails: return "Euler sum is not 24";
    case MonodromyVerdict::ExponentSumFails: return "monodromy exponents do not cancel";
    case MonodromyVerdict::MixedFamilies: return "fibres from both j = 0 and j = 1728 families";
  }
  return "?";
}

NecessaryConditionReport necessary_conditions(const FibreConfiguration& config) {
  bool alpha = false, beta = false;
  for (const auto& f : config.fibres()) {
    alpha = alpha || is_alpha_family(f.kind);
    beta = beta || is_beta_family(f.kind);
  }
  NecessaryConditionReport r{MonodromyVerdict::NecessaryConditionsPass, config.euler_sum(), 0, 2};
  if (alpha && beta) {
    r.verdict = MonodromyVerdict::MixedFamilies;
    return r;
  }
  for (const auto& f : config.fibres()) {
    int e = 0;
    if (alpha) {
      r.modulus = 6;
      e = f.kind == FibreKind::I0star ? 3 : kodaira::fibre_for(f.kind).power.exponent;
    } else if (beta) {
      r.modulus = 4;
      e = f.kind == FibreKind::I0star ? 2 : kodaira::fibre_for(f.kind).power.exponent;
    } else {
      e = 1;  // -I generates a group of order 2
    }
    r.exponent_sum += e * static_cast<int>(f.count);
  }
  if (r.euler_sum != 24) {
    r.verdict = MonodromyVerdict::EulerSumFails;
  } else if (r.exponent_sum % r.modulus != 0) {
    r.verdict = MonodromyVerdict::ExponentSumFails;
  }
  return r;
}

}  // namespace isotriv::configs
