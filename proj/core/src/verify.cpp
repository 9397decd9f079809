#include "isotriv/verify.hpp"

#include <algorithm>
#include <sstream>

#include "isotriv/sl2z.hpp"
#include "isotriv/torus_analysis.hpp"
#include "isotriv/weierstrass.hpp"

namespace isotriv::verify {

namespace {

using kodaira::FibreKind;
using weierstrass::JCase;
using weierstrass::RationalPolynomial;

struct TableRow {
  FibreKind kind;
  const char* dynkin;
  int euler;
  const char* monodromy;
  unsigned order;
};

// Reference values, independent of the table under test.
constexpr TableRow kReferenceTable[] = {
    {FibreKind::II, "~A0", 2, "alpha", 6},         {FibreKind::III, "~A1", 3, "beta", 4},
    {FibreKind::IV, "~A2", 4, "alpha^2", 3},       {FibreKind::I0star, "~D4", 6, "alpha^3", 2},
    {FibreKind::IIstar, "~E8", 10, "alpha^5", 6},  {FibreKind::IIIstar, "~E7", 9, "beta^3", 4},
    {FibreKind::IVstar, "~E6", 8, "alpha^4", 3},
};

class Recorder {
 public:
  void add(std::string id, std::string location, std::string expected, std::string computed) {
    const bool pass = expected == computed;
    report_.checks.push_back({std::move(id), std::move(location), std::move(expected), std::move(computed), pass});
  }

  // Runs f and records its exception message as the computed value.
  template <typename F>
  void guarded(std::string id, std::string location, std::string expected, F&& f) {
    std::string computed;
    try {
      computed = f();
    } catch (const std::exception& e) {
      computed = std::string("error: ") + e.what();
    }
    add(std::move(id), std::move(location), std::move(expected), std::move(computed));
  }

  VerificationReport take() { return std::move(report_); }

 private:
  VerificationReport report_;
};

RationalPolynomial distinct_roots(unsigned count, unsigned first = 0) {
  std::vector<std::pair<Rational, unsigned>> roots;
  for (unsigned i = 0; i < count; ++i) roots.emplace_back(Rational(first + i), 1);
  return RationalPolynomial::from_roots(roots);
}

std::string fibre_summary(const weierstrass::IsotrivialK3Report& r) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [kind, count] : r.fibres) {
    os << (first ? "" : " ") << kodaira::display_name(kind) << "x" << count;
    first = false;
  }
  os << "; euler " << r.euler_total << "; " << (r.valid_k3 ? "valid" : "invalid");
  return os.str();
}

void table_checks(Recorder& rec, const kodaira::FibreTable& table) {
  for (const auto& row : kReferenceTable) {
    const std::string name = kodaira::kind_name(row.kind);
    std::ostringstream expected;
    expected << row.dynkin << ", euler " << row.euler << ", " << row.monodromy << ", order " << row.order;
    rec.guarded("monodromy-table/" + name, "fibre table, row " + kodaira::display_name(row.kind), expected.str(),
                [&] {
                  const auto& f = table.at(row.kind);
                  // Order recomputed from the matrix, not read from the row.
                  const auto order = sl2z::order(f.monodromy);
                  std::ostringstream os;
                  os << f.dynkin << ", euler " << f.euler << ", " << kodaira::power_to_string(f.power) << ", order "
                     << sl2z::order_to_string(order);
                  if (f.monodromy != kodaira::evaluate(f.power)) os << " (matrix disagrees with power)";
                  if (f.monodromy_order != order) os << " (stored order disagrees)";
                  return os.str();
                });
  }
}

void config_checks(Recorder& rec, const VerifyOptions& options) {
  rec.guarded("starred-types/euler-sum", "Euler numbers of the starred fibres", "33", [] {
    int sum = 0;
    for (const auto& f : kodaira::starred_types()) sum += f.euler;
    return std::to_string(sum);
  });
  rec.guarded("starred-configurations", "starred fibres: partitions of 24",
              "10 + 8 + 6 | 6 + 6 + 6 + 6 | 8 + 8 + 8 | 9 + 9 + 6", [] {
                std::vector<std::string> ledgers;
                for (const auto& c : configs::enumerate_starred()) ledgers.push_back(c.euler_ledger());
                std::sort(ledgers.begin(), ledgers.end());
                std::string out;
                for (const auto& l : ledgers) out += (out.empty() ? "" : " | ") + l;
                return out;
              });

  if (options.rigidity) {
    for (const auto& config : configs::enumerate_starred()) {
      std::string id = "rigidity";
      for (const auto& f : config.fibres()) id += "/" + kodaira::kind_name(f.kind) + "x" + std::to_string(f.count);
      rec.guarded(id, "rigidity of the starred configurations", "forced", [&] {
        const auto report = configs::rigid_configuration_check(config, options.word_length);
        if (!report.forced) return std::to_string(report.solutions.size()) + " solutions";
        for (const auto& m : report.forced_monodromies) {
          if (m.monodromy != kodaira::fibre_for(m.kind).monodromy) return std::string("forced to a conjugate");
        }
        return std::string("forced");
      });
    }
  }

  rec.guarded("profiles/j0-count", "zero orders below 6 for b(t)", "47",
              [] { return std::to_string(configs::enumerate_profiles(JCase::Zero).size()); });
  rec.guarded("profiles/j1728-count", "zero orders below 4 for a(t)", "10",
              [] { return std::to_string(configs::enumerate_profiles(JCase::J1728).size()); });
  for (JCase j : {JCase::Zero, JCase::J1728}) {
    rec.guarded("profiles/euler-24/" + weierstrass::j_case_name(j), "Euler numbers of an isotrivial K3 sum to 24",
                "all 24", [j] {
                  const unsigned degree = weierstrass::bundle_degree(j);
                  for (const auto& p : configs::enumerate_profiles(j)) {
                    const auto r = weierstrass::classify_surface(j, configs::realize_profile(p, degree));
                    if (r.euler_total != 24 || !r.valid_k3) return "profile " + p.to_string() + " gives " + fibre_summary(r);
                  }
                  return std::string("all 24");
                });
  }
}

void weierstrass_checks(Recorder& rec) {
  rec.guarded("weierstrass/twelve-simple-zeros", "j = 0 with twelve simple zeros of b(t)", "IIx12; euler 24; valid",
              [] { return fibre_summary(weierstrass::classify_surface(JCase::Zero, distinct_roots(12))); });
  rec.guarded("weierstrass/a-profile-3-3-2", "j = 1728 with zeros of order 3, 3, 2 of a(t)",
              "I0*x1 III*x2; euler 24; valid", [] {
                const auto a = RationalPolynomial::from_roots({{0, 3}, {1, 3}, {2, 2}});
                return fibre_summary(weierstrass::classify_surface(JCase::J1728, a));
              });
  rec.guarded("weierstrass/j0-order-bound", "zero of b(t) of order 6 is not a rational double point", "invalid", [] {
    const auto b = RationalPolynomial::from_roots({{0, 6}}) * distinct_roots(6, 1);
    return std::string(weierstrass::classify_surface(JCase::Zero, b).valid_k3 ? "valid" : "invalid");
  });
  rec.guarded("weierstrass/j1728-order-bound", "zero of a(t) of order 4 is not a rational double point", "invalid",
              [] {
                const auto a = RationalPolynomial::from_roots({{0, 4}}) * distinct_roots(4, 1);
                return std::string(weierstrass::classify_surface(JCase::J1728, a).valid_k3 ? "valid" : "invalid");
              });
}

void torus_checks(Recorder& rec) {
  using namespace torus;
  const std::pair<unsigned, unsigned> fixed_counts[] = {{2, 16}, {3, 9}, {4, 4}, {6, 1}};
  for (const auto& [k, count] : fixed_counts) {
    rec.guarded("torus/fixed-points/order-" + std::to_string(k), "order-" + std::to_string(k) + " action on E^2",
                std::to_string(count) + " points, |det(M-I)| " + std::to_string(count), [k] {
                  const auto g = cyclic_surface(k);
                  const auto& gen = g.generators().front().map;
                  const auto locus = fixed_locus(gen);
                  const auto id = IntMatrix::identity(gen.lattice_dimension());
                  Integer det = (gen.linear() - id).determinant();
                  det = abs(det);
                  return (locus.dimension() == 0 ? to_string(locus.component_count()) : std::string("positive-dim")) +
                         " points, |det(M-I)| " + to_string(det);
                });
  }

  auto inventory_text = [](const SingularityInventory& inv) {
    std::ostringstream os;
    bool first = true;
    for (auto it = inv.points_by_stabilizer_order.rbegin(); it != inv.points_by_stabilizer_order.rend(); ++it) {
      os << (first ? "" : ", ") << it->second << " points / " << inv.point_orbits_by_stabilizer_order.at(it->first)
         << " orbits of order " << it->first;
      first = false;
    }
    return os.str();
  };
  rec.guarded("torus/inventory/cyclic-surface-4", "order-4 action on E^2",
              "4 points / 4 orbits of order 4, 12 points / 6 orbits of order 2",
              [&] { return inventory_text(singularity_inventory(cyclic_surface(4))); });
  rec.guarded("torus/inventory/cyclic-surface-6", "order-6 action on E^2",
              "1 points / 1 orbits of order 6, 8 points / 4 orbits of order 3, 15 points / 5 orbits of order 2",
              [&] { return inventory_text(singularity_inventory(cyclic_surface(6))); });
  rec.guarded("torus/labels/cyclic-surface-4", "order-4 action on E^2", "A1 x6, A3 x4", [] {
    const auto inv = singularity_inventory(cyclic_surface(4));
    std::string out;
    for (const auto& [label, count] : inv.orbits_by_label) out += (out.empty() ? "" : ", ") + label + " x" + std::to_string(count);
    return out;
  });

  for (unsigned n : {3U, 4U}) {
    const std::string tag = "translated-" + std::to_string(n);
    const std::string where = "translated (Z/2)^n x| S_n action on E^" + std::to_string(2 * n);
    rec.guarded("torus/" + tag + "/gamma-free", where, "no fixed points", [n] {
      const auto g = translated_action(n);
      for (unsigned i = 1; i <= n; ++i) {
        if (fixed_locus(g.evaluate_word("gamma" + std::to_string(i))).solvable()) {
          return "gamma" + std::to_string(i) + " has fixed points";
        }
      }
      return std::string("no fixed points");
    });
    rec.guarded("torus/" + tag + "/gamma12-stratum", where,
                "dimension " + std::to_string(2 * (n - 2)) + ", -1 on a 4-dimensional slice", [n] {
                  const auto g = translated_action(n);
                  const auto locus = fixed_locus(g.evaluate_word("gamma1*gamma2"));
                  if (!locus.solvable() || locus.dimension() == 0) return std::string("no positive-dimensional locus");
                  const auto inv = singularity_inventory(g);
                  const auto idx = *g.index_of(g.evaluate_word("gamma1*gamma2"));
                  for (const auto& s : inv.strata) {
                    if (s.dimension == locus.dimension() &&
                        std::find(s.stabilizer.begin(), s.stabilizer.end(), idx) != s.stabilizer.end() &&
                        s.stabilizer.size() == 2 && s.transverse_minus_one) {
                      return "dimension " + std::to_string(s.dimension) + ", -1 on a " +
                             std::to_string(s.transverse_dimension) + "-dimensional slice";
                    }
                  }
                  return std::string("no stratum with stabilizer {1, gamma1*gamma2}");
                });
    rec.guarded("torus/" + tag + "/gamma12-contains-point", where, "contains (1/4, 0, 3/4, 0, 0, 0, ...)", [n] {
      const auto g = translated_action(n);
      std::vector<CMNumber> z(2 * n, CMNumber(CMField::Gauss, 0));
      z[0] = CMNumber(CMField::Gauss, Rational(1, 4));
      z[2] = CMNumber(CMField::Gauss, Rational(3, 4));
      const bool in = fixed_locus(g.evaluate_word("gamma1*gamma2")).contains(TorusPoint::from_complex(z));
      return std::string(in ? "contains" : "misses") + " (1/4, 0, 3/4, 0, 0, 0, ...)";
    });
    rec.guarded("torus/" + tag + "/obstruction", where, "OBSTRUCTED",
                [n] { return verdict_name(desingularization_obstruction(translated_action(n)).verdict); });
  }

  rec.guarded("torus/hodge/translated-3/h20", "translated action on E^6", "1",
              [] { return std::to_string(invariant_form_dimension(translated_action(3), 2)); });
  rec.guarded("torus/hodge/matsushita-6-3/h10", "Z6-twisted action on E^6", "0",
              [] { return std::to_string(invariant_form_dimension(matsushita_action(6, 3), 1)); });
  rec.guarded("torus/hodge/matsushita-6-3/h20", "Z6-twisted action on E^6", "1",
              [] { return std::to_string(invariant_form_dimension(matsushita_action(6, 3), 2)); });
  rec.guarded("torus/hodge/matsushita-6-3/base-top-form", "Z6-twisted action, induced action on the base E^3", "1",
              [] { return std::to_string(invariant_form_dimension(base_projection(matsushita_action(6, 3)), 3)); });
  rec.guarded("torus/matsushita-6-3/obstruction", "Z6-twisted action on E^6", "OBSTRUCTED",
              [] { return verdict_name(desingularization_obstruction(matsushita_action(6, 3)).verdict); });

  rec.guarded("torus/symplectic-builtins", "built-in actions preserve the symplectic form", "all symplectic", [] {
    const char* specs[] = {"cyclic-surface:2", "cyclic-surface:3", "cyclic-surface:4", "cyclic-surface:6",
                           "hilbert:3,2",      "hilbert:4,2",      "translated:3",     "translated:4",
                           "matsushita:6,3",   "matsushita:4,3"};
    for (const char* spec : specs) {
      if (!preserves_symplectic(builtin_action(spec))) return std::string(spec) + " is not symplectic";
    }
    return std::string("all symplectic");
  });
}

}  // namespace

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    list.push_back({{"id", c.id},
                    {"location", c.location},
                    {"expected", c.expected},
                    {"computed", c.computed},
                    {"pass", c.pass}});
  }
  return {{"checks", list}, {"summary", {{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}}}};
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    if (c.pass) {
      os << "PASS " << c.id << "  " << c.computed << "\n";
    } else {
      os << "FAIL " << c.id << "  expected " << c.expected << ", computed " << c.computed << "  [" << c.location
         << "]\n";
    }
  }
  os << passed() << "/" << checks.size() << " checks passed\n";
  return os.str();
}

VerificationReport verify_claims(const VerifyOptions& options) {
  Recorder rec;
  table_checks(rec, *options.table);
  config_checks(rec, options);
  weierstrass_checks(rec);
  torus_checks(rec);
  return rec.take();
}

}  // namespace isotriv::verify
