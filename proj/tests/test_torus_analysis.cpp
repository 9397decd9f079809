#include <gtest/gtest.h>

#include <set>

#include "isotriv/torus_analysis.hpp"
#include "support/oracles.hpp"

using namespace isotriv;
using namespace isotriv::torus;

namespace {

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Stratum of the given dimension whose pointwise stabilizer is exactly
// {id, element}.
const Stratum* find_stratum(const SingularityInventory& inv, std::size_t element, std::size_t dimension) {
  const std::vector<std::size_t> wanted{0, element};
  for (const auto& s : inv.strata) {
    if (s.dimension == dimension && s.stabilizer == wanted) return &s;
  }
  return nullptr;
}

}  // namespace

// --- Groups -----------------------------------------------------------------

TEST(ActionGroup, BuiltinOrders) {
  EXPECT_EQ(cyclic_surface(3).order(), 3u);
  EXPECT_EQ(cyclic_surface(3).field(), CMField::Eisenstein);
  EXPECT_EQ(translated_action(3).order(), 48u);
  EXPECT_EQ(translated_action(4).order(), 384u);
  EXPECT_EQ(matsushita_action(6, 3).order(), 108u);
  EXPECT_EQ(matsushita_action(4, 3).order(), 48u);
  for (unsigned k : {2u, 3u, 4u, 6u}) {
    for (unsigned n : {1u, 2u, 3u}) {
      EXPECT_EQ(hilbert_action(k, n).order(), power(k, n) * factorial(n)) << k << "," << n;
    }
  }
}

TEST(ActionGroup, ClosureIsAGroup) {
  const auto g = translated_action(3);
  EXPECT_TRUE(g.element(0).is_identity());
  EXPECT_EQ(g.word(0), "id");
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto inv = g.inverse_index(i);
    EXPECT_EQ(g.multiply(i, inv), 0u);
    EXPECT_TRUE(g.index_of(g.element(i).inverse()).has_value());
    EXPECT_EQ(g.evaluate_word(g.word(i)), g.element(i));
  }
  EXPECT_EQ(g.element_order(*g.index_of(g.evaluate_word("gamma1"))), 2u);
}

TEST(ActionGroup, OrderCap) {
  EXPECT_THROW(hilbert_action(6, 3, std::nullopt, 100), OrderCapExceeded);
}

TEST(ActionGroup, FieldRules) {
  EXPECT_THROW(cyclic_surface(4, CMField::Eisenstein), std::invalid_argument);
  EXPECT_THROW(cyclic_surface(5), std::invalid_argument);
  EXPECT_EQ(cyclic_surface(2, CMField::Eisenstein).field(), CMField::Eisenstein);
  EXPECT_THROW(translated_action(3, {Rational(1, 3), 0}), std::invalid_argument);
  EXPECT_THROW(translated_action(3, {0, 0}), std::invalid_argument);
  EXPECT_THROW(builtin_action("moebius:3"), std::invalid_argument);
  EXPECT_EQ(builtin_action("matsushita:6,3").order(), 108u);
}

TEST(ActionGroup, JsonRoundTrip) {
  const auto g = matsushita_action(6, 3);
  const auto back = FiniteActionGroup::from_json(g.to_json());
  EXPECT_EQ(back.order(), g.order());
  EXPECT_EQ(back.field(), g.field());
  EXPECT_EQ(back.to_json(), g.to_json());
}

// --- Inventories ------------------------------------------------------------

TEST(Inventory, CyclicSurface2) {
  const auto inv = singularity_inventory(cyclic_surface(2));
  EXPECT_EQ(inv.points_by_stabilizer_order, (std::map<std::size_t, std::size_t>{{2, 16}}));
  EXPECT_EQ(inv.orbits_by_label, (std::map<std::string, std::size_t>{{"A1", 16}}));
}

TEST(Inventory, CyclicSurface4) {
  const auto inv = singularity_inventory(cyclic_surface(4));
  EXPECT_EQ(inv.points_by_stabilizer_order, (std::map<std::size_t, std::size_t>{{2, 12}, {4, 4}}));
  EXPECT_EQ(inv.point_orbits_by_stabilizer_order, (std::map<std::size_t, std::size_t>{{2, 6}, {4, 4}}));
  EXPECT_EQ(inv.orbits_by_label, (std::map<std::string, std::size_t>{{"A1", 6}, {"A3", 4}}));
}

TEST(Inventory, CyclicSurface6) {
  const auto inv = singularity_inventory(cyclic_surface(6));
  EXPECT_EQ(inv.points_by_stabilizer_order, (std::map<std::size_t, std::size_t>{{2, 15}, {3, 8}, {6, 1}}));
  EXPECT_EQ(inv.point_orbits_by_stabilizer_order, (std::map<std::size_t, std::size_t>{{2, 5}, {3, 4}, {6, 1}}));
  EXPECT_EQ(inv.orbits_by_label, (std::map<std::string, std::size_t>{{"A1", 5}, {"A2", 4}, {"A5", 1}}));
  EXPECT_FALSE(inv.notes.empty());
}

TEST(Inventory, CyclicSurface3) {
  const auto inv = singularity_inventory(cyclic_surface(3));
  EXPECT_EQ(inv.points_by_stabilizer_order, (std::map<std::size_t, std::size_t>{{3, 9}}));
  EXPECT_EQ(inv.orbits_by_label, (std::map<std::string, std::size_t>{{"A2", 9}}));
}

TEST(Inventory, OrbitSizesTimesStabilizerIsGroupOrder) {
  for (const char* spec : {"cyclic-surface:6", "hilbert:2,2", "hilbert:3,2", "translated:3", "matsushita:6,3"}) {
    const auto g = builtin_action(spec);
    const auto inv = singularity_inventory(g);
    for (const auto& s : inv.strata) {
      // H_C fixes C pointwise; the setwise stabilizer may be larger.
      EXPECT_EQ(g.order() % (s.orbit_size * s.stabilizer.size()), 0u) << spec;
      if (s.dimension == 0) EXPECT_EQ(s.orbit_size * s.stabilizer.size(), g.order()) << spec;
      EXPECT_EQ(generic_stabilizer(g, s.sample, s.directions), s.stabilizer) << spec;
      EXPECT_EQ(s.dimension + s.transverse_dimension, g.complex_dimension());
    }
  }
}

TEST(Inventory, PointCountsAgainstGridOracle) {
  // Isolated points with nontrivial stabilizer on E^2: the union of the
  // fixed sets of the nonidentity elements, counted on a fine grid.
  for (unsigned k : {2u, 3u, 4u, 6u}) {
    const auto g = cyclic_surface(k);
    const auto inv = singularity_inventory(g);
    std::size_t total = 0;
    for (const auto& [order, count] : inv.points_by_stabilizer_order) total += count;
    std::set<std::vector<Rational>> points;
    const long N = 6;
    for (long a = 0; a < N; ++a) {
      for (long b = 0; b < N; ++b) {
        for (long c = 0; c < N; ++c) {
          for (long d = 0; d < N; ++d) {
            const TorusPoint p({oracles::ratio(a, N), oracles::ratio(b, N), oracles::ratio(c, N), oracles::ratio(d, N)});
            for (std::size_t h = 1; h < g.order(); ++h) {
              if (g.element(h).apply(p) == p) {
                points.insert(p.coords());
                break;
              }
            }
          }
        }
      }
    }
    EXPECT_EQ(total, points.size()) << k;
  }
}

TEST(Inventory, TranslatedGammaFreeAndGamma12Stratum) {
  const auto g = translated_action(3);
  for (const char* w : {"gamma1", "gamma2", "gamma3"}) EXPECT_FALSE(fixed_locus(g.evaluate_word(w)).solvable());
  const auto g12 = g.evaluate_word("gamma1*gamma2");
  const auto locus = fixed_locus(g12);
  ASSERT_TRUE(locus.solvable());
  EXPECT_EQ(locus.dimension(), 2u);
  const auto f = CMField::Gauss;
  std::vector<CMNumber> z(6, CMNumber(f, 0));
  z[0] = CMNumber(f, Rational(1, 4));
  z[2] = CMNumber(f, Rational(3, 4));
  EXPECT_TRUE(locus.contains(TorusPoint::from_complex(z)));

  const auto inv = singularity_inventory(g);
  const auto* s = find_stratum(inv, *g.index_of(g12), 2);
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->transverse_dimension, 2u * 2);
  EXPECT_EQ(s->stabilizer.size(), 2u);
  EXPECT_TRUE(s->transverse_minus_one);
  EXPECT_FALSE(s->generated_by_reflections);
}

TEST(Inventory, TorsionChoiceDoesNotMatter) {
  const auto base = singularity_inventory(translated_action(3));
  for (const std::vector<Rational>& t : {std::vector<Rational>{0, Rational(1, 2)},
                                          std::vector<Rational>{Rational(1, 2), Rational(1, 2)}}) {
    const auto g = translated_action(3, t);
    const auto inv = singularity_inventory(g);
    EXPECT_EQ(inv.strata.size(), base.strata.size());
    EXPECT_EQ(inv.points_by_stabilizer_order, base.points_by_stabilizer_order);
    EXPECT_EQ(desingularization_obstruction(g).verdict, DesingularizationVerdict::Obstructed);
    EXPECT_EQ(invariant_form_dimension(g, 2), 1u);
  }
}

TEST(Inventory, JsonIsDeterministic) {
  const auto g = matsushita_action(6, 3);
  EXPECT_EQ(singularity_inventory(g).to_json(g).dump(), singularity_inventory(g).to_json(g).dump());
}

// --- Forms and symplectic structure -----------------------------------------

TEST(Forms, Examples) {
  const auto trivial = FiniteActionGroup(CMField::Gauss, 2, {}, "trivial");
  EXPECT_EQ(invariant_form_dimension(trivial, 1), 2u);
  EXPECT_EQ(invariant_form_dimension(trivial, 2), 1u);
  const auto m = matsushita_action(6, 3);
  EXPECT_EQ(invariant_form_dimension(m, 1), 0u);
  EXPECT_EQ(invariant_form_dimension(m, 2), 1u);
  EXPECT_EQ(invariant_form_dimension(translated_action(3), 2), 1u);
  EXPECT_EQ(invariant_form_dimension(base_projection(m), 3), 1u);
  EXPECT_THROW(invariant_form_dimension(m, 7), std::invalid_argument);
}

TEST(Forms, ConstantsAndTopFormForBuiltins) {
  for (const auto& spec : {"cyclic-surface:2", "cyclic-surface:3", "cyclic-surface:4", "cyclic-surface:6",
                           "hilbert:2,2", "hilbert:4,2", "translated:3", "matsushita:6,3", "matsushita:4,3"}) {
    const auto g = builtin_action(spec);
    EXPECT_EQ(invariant_form_dimension(g, 0), 1u) << spec;
    ASSERT_TRUE(preserves_symplectic(g)) << spec;
    // omega^{d/2} is a nonzero invariant top form.
    EXPECT_GE(invariant_form_dimension(g, g.complex_dimension()), 1u) << spec;
  }
}

TEST(Symplectic, Examples) {
  const auto f = CMField::Eisenstein;
  const auto z = CMNumber::tau(f);
  EXPECT_FALSE(is_symplectic(CMMatrix::diagonal({z, z})));
  EXPECT_TRUE(is_symplectic(CMMatrix::diagonal({z, z.inverse()})));
  const FiniteActionGroup bad(f, 2, {{"h", TorusAutomorphism::from_holomorphic(CMMatrix::diagonal({z, z}),
                                                                               TorusPoint::zero(4))}});
  EXPECT_FALSE(preserves_symplectic(bad));
  EXPECT_THROW(desingularization_obstruction(bad), std::invalid_argument);
  const FiniteActionGroup odd(f, 1, {{"h", TorusAutomorphism::from_holomorphic(CMMatrix::diagonal({z}),
                                                                               TorusPoint::zero(2))}});
  EXPECT_THROW(preserves_symplectic(odd), std::invalid_argument);
}

// --- Obstruction ------------------------------------------------------------

TEST(Obstruction, Translated) {
  for (unsigned n : {3u, 4u}) {
    const auto g = translated_action(n);
    const auto r = desingularization_obstruction(g);
    EXPECT_EQ(r.verdict, DesingularizationVerdict::Obstructed);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.witness->transverse_dimension, 4u);
    EXPECT_TRUE(r.witness->transverse_minus_one);
    std::set<std::string> words;
    for (auto i : r.witness->stabilizer) words.insert(g.word(i));
    EXPECT_EQ(words, (std::set<std::string>{"id", "gamma1*gamma2"}));
  }
}

TEST(Obstruction, Matsushita) {
  const auto g = matsushita_action(6, 3);
  const auto r = desingularization_obstruction(g);
  EXPECT_EQ(r.verdict, DesingularizationVerdict::Obstructed);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->transverse_dimension, 4u);
  EXPECT_EQ(r.witness->dimension, 2u);
  EXPECT_EQ(r.witness->stabilizer.size(), 6u);
  EXPECT_TRUE(r.witness->cyclic);
  EXPECT_TRUE(r.witness->symplectic_reflections.empty());
}

TEST(Obstruction, CyclicSurfacesResolvable) {
  for (unsigned k : {2u, 3u, 4u, 6u}) {
    EXPECT_EQ(desingularization_obstruction(cyclic_surface(k)).verdict, DesingularizationVerdict::Resolvable) << k;
  }
}

TEST(Obstruction, VerdictNames) {
  EXPECT_EQ(verdict_name(DesingularizationVerdict::Obstructed), "OBSTRUCTED");
  EXPECT_EQ(verdict_name(DesingularizationVerdict::Resolvable), "RESOLVABLE");
  EXPECT_EQ(verdict_name(DesingularizationVerdict::Undecided), "UNDECIDED-BY-THIS-TOOL");
}

TEST(SplittingBase, BaseProjectionOfHilbert) {
  const auto b = base_projection(hilbert_action(3, 2));
  EXPECT_EQ(b.complex_dimension(), 2u);
  EXPECT_EQ(b.order(), 18u);
}
