#include <gtest/gtest.h>

#include <random>

#include "isotriv/torus.hpp"
#include "support/oracles.hpp"

using namespace isotriv;
using namespace isotriv::torus;

namespace {

std::vector<std::vector<Rational>> rational_rows(const IntMatrix& m) {
  std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = Rational(m(i, j));
  }
  return rows;
}

std::vector<std::vector<long>> long_rows(const IntMatrix& m) {
  std::vector<std::vector<long>> rows(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).get_si();
  }
  return rows;
}

CMNumber unit(CMField f, unsigned k) { return root_of_unity(f, k); }

TorusAutomorphism diagonal(CMField f, const std::vector<CMNumber>& entries,
                           std::vector<Rational> t = {}) {
  if (t.empty()) t.assign(2 * entries.size(), 0);
  return TorusAutomorphism::from_holomorphic(CMMatrix::diagonal(entries), TorusPoint(std::move(t)));
}

}  // namespace

// --- CM fields --------------------------------------------------------------

TEST(CMField, TauRelations) {
  const auto i = CMNumber::tau(CMField::Gauss);
  EXPECT_EQ(i * i, CMNumber(CMField::Gauss, -1));
  const auto z = CMNumber::tau(CMField::Eisenstein);
  EXPECT_EQ(z * z, z - CMNumber(CMField::Eisenstein, 1));
  EXPECT_EQ(z.pow(6), CMNumber(CMField::Eisenstein, 1));
  EXPECT_EQ(z.pow(3), CMNumber(CMField::Eisenstein, -1));
  EXPECT_EQ(z.norm(), 1);
  EXPECT_EQ((z * z.conjugate()), CMNumber(CMField::Eisenstein, 1));
}

TEST(CMField, FiniteUnits) {
  EXPECT_EQ(CMNumber::tau(CMField::Gauss).root_of_unity_order(), 4u);
  EXPECT_EQ(CMNumber::tau(CMField::Eisenstein).root_of_unity_order(), 6u);
  EXPECT_EQ(unit(CMField::Eisenstein, 3).root_of_unity_order(), 3u);
  EXPECT_EQ(CMNumber(CMField::Gauss, -1).root_of_unity_order(), 2u);
  EXPECT_EQ(CMNumber(CMField::Gauss, 1, 1).root_of_unity_order(), 0u);
  EXPECT_THROW(root_of_unity(CMField::Gauss, 3), std::invalid_argument);
  EXPECT_EQ(parse_field("gauss"), CMField::Gauss);
  EXPECT_THROW(parse_field("cyclotomic"), std::invalid_argument);
}

TEST(CMField, CharacteristicPolynomialAndExteriorTraces) {
  const auto f = CMField::Eisenstein;
  const auto z = CMNumber::tau(f);
  const auto a = CMMatrix::diagonal({z, z.pow(5), CMNumber(f, 1)});
  // e_p of the eigenvalues.
  EXPECT_EQ(a.exterior_power_trace(0), CMNumber(f, 1));
  EXPECT_EQ(a.exterior_power_trace(1), z + z.pow(5) + CMNumber(f, 1));
  EXPECT_EQ(a.exterior_power_trace(2), z * z.pow(5) + z + z.pow(5));
  EXPECT_EQ(a.exterior_power_trace(3), a.determinant());
  EXPECT_EQ(a.determinant(), CMNumber(f, 1));
}

// --- Integer matrices -------------------------------------------------------

TEST(IntMatrix, SmithFormAgainstDeterminant) {
  std::mt19937 rng(43);
  std::uniform_int_distribution<long> entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 4;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    }
    const auto snf = smith_normal_form(m);
    EXPECT_EQ(snf.U * m * snf.V, snf.D);
    EXPECT_EQ(abs(snf.U.determinant()), 1);
    EXPECT_EQ(abs(snf.V.determinant()), 1);
    Integer prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
      prod *= snf.invariant(i);
      if (i + 1 < snf.rank) {
        EXPECT_EQ(snf.invariant(i + 1) % snf.invariant(i), 0);
      }
    }
    const Rational det = oracles::determinant(rational_rows(m));
    EXPECT_EQ(Rational(abs(prod)), abs(det));
    EXPECT_EQ(m.determinant(), det.get_num());
    EXPECT_EQ(snf.rank == n, det != 0);
    EXPECT_EQ(m.rank(), snf.rank);
  }
}

TEST(IntMatrix, HermiteFormSpansSameLattice) {
  const auto m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const auto h = hermite_normal_form(m);
  EXPECT_EQ(h.U * m, h.H);
  EXPECT_EQ(abs(h.U.determinant()), 1);
  for (std::size_t i = 0; i < h.rank; ++i) {
    for (std::size_t k = i + 1; k < h.H.rows(); ++k) {
      // Entries below each pivot vanish.
      std::size_t pivot = 0;
      while (h.H(i, pivot) == 0) ++pivot;
      EXPECT_EQ(h.H(k, pivot), 0);
      EXPECT_GT(h.H(i, pivot), 0);
    }
  }
}

TEST(IntMatrix, UnimodularInverse) {
  const auto m = IntMatrix::from_rows({{2, 1}, {1, 1}});
  const auto inv = m.unimodular_inverse();
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(m * *inv, IntMatrix::identity(2));
  EXPECT_FALSE(IntMatrix::from_rows({{2, 0}, {0, 1}}).unimodular_inverse().has_value());
}

// --- Points and automorphisms -----------------------------------------------

TEST(TorusPoint, ReducesModOne) {
  const TorusPoint p({Rational(5, 4), Rational(-1, 3)});
  EXPECT_EQ(p[0], Rational(1, 4));
  EXPECT_EQ(p[1], Rational(2, 3));
  EXPECT_EQ(p.denominator(), 12);
  EXPECT_EQ(p.to_string(), "(1/4, 2/3)");
  EXPECT_EQ(TorusPoint::parse("(1/4, 2/3)"), p);
}

TEST(TorusPoint, FromComplex) {
  const auto f = CMField::Gauss;
  const auto p = TorusPoint::from_complex({CMNumber(f, Rational(1, 4)), CMNumber(f, 0, Rational(3, 4))});
  EXPECT_EQ(p, TorusPoint({Rational(1, 4), 0, 0, Rational(3, 4)}));
}

TEST(TorusAutomorphism, HolomorphyAndDeterminant) {
  EXPECT_THROW(TorusAutomorphism(CMField::Gauss, IntMatrix::from_rows({{1, 1}, {0, 1}}), TorusPoint::zero(2)),
               std::invalid_argument);
  EXPECT_THROW(TorusAutomorphism(CMField::Gauss, IntMatrix::from_rows({{2, 0}, {0, 2}}), TorusPoint::zero(2)),
               std::invalid_argument);
  const auto g = diagonal(CMField::Gauss, {unit(CMField::Gauss, 4)});
  EXPECT_EQ(g.linear(), tau_block(CMField::Gauss));
  EXPECT_EQ(g.holomorphic_matrix(), CMMatrix::diagonal({CMNumber::tau(CMField::Gauss)}));
  EXPECT_EQ(multiplication_block(CMNumber::tau(CMField::Eisenstein)), IntMatrix::from_rows({{0, -1}, {1, 1}}));
}

TEST(TorusAutomorphism, ComposeAndInverse) {
  const auto f = CMField::Eisenstein;
  const auto g = diagonal(f, {unit(f, 6), unit(f, 6).inverse()}, {Rational(1, 3), 0, 0, Rational(1, 2)});
  EXPECT_TRUE(g.compose(g.inverse()).is_identity());
  auto p = g;
  for (int k = 1; k < 6; ++k) p = g.compose(p);
  EXPECT_EQ(p.linear(), IntMatrix::identity(4));
}

TEST(TorusAutomorphism, ActThenReduceEqualsReduceThenAct) {
  std::mt19937 rng(47);
  std::uniform_int_distribution<long> num(-20, 20);
  const auto f = CMField::Gauss;
  const auto g = diagonal(f, {unit(f, 4), unit(f, 4).inverse()}, {Rational(1, 2), 0, 0, 0});
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> raw(4);
    for (auto& x : raw) {
      x = oracles::ratio(num(rng), 7);
      x.canonicalize();
    }
    std::vector<Rational> image = g.linear() * raw;
    for (std::size_t i = 0; i < 4; ++i) image[i] += g.translation()[i];
    EXPECT_EQ(TorusPoint(image), g.apply(TorusPoint(raw)));
  }
}

// --- Fixed loci -------------------------------------------------------------

TEST(FixedLocus, CyclicSurfaceCounts) {
  const std::pair<unsigned, std::size_t> cases[] = {{2, 16}, {3, 9}, {4, 4}, {6, 1}};
  for (const auto& [k, expected] : cases) {
    const auto f = k == 4 || k == 2 ? CMField::Gauss : CMField::Eisenstein;
    const auto a = k == 3 ? unit(f, 6).pow(2) : unit(f, k);
    const auto g = diagonal(f, {a, a.inverse()});
    const auto locus = fixed_locus(g);
    ASSERT_TRUE(locus.solvable());
    EXPECT_EQ(locus.dimension(), 0u);
    EXPECT_EQ(locus.component_count(), expected);
    EXPECT_EQ(locus.isolated_points().size(), expected);
    EXPECT_EQ(oracles::grid_fixed_points(long_rows(g.linear()), g.translation().coords(), 6), expected);
    for (const auto& p : locus.isolated_points()) EXPECT_EQ(g.apply(p), p);
  }
}

TEST(FixedLocus, MinusOneFixesTwoTorsion) {
  const auto g = diagonal(CMField::Gauss, {CMNumber(CMField::Gauss, -1)});
  const auto pts = fixed_locus(g).isolated_points();
  ASSERT_EQ(pts.size(), 4u);
  for (const auto& p : pts) {
    for (const auto& c : p.coords()) EXPECT_TRUE(is_integral(2 * c));
  }
}

TEST(FixedLocus, UnsolvableTranslation) {
  // -1 on the first factor, translation by a 2-torsion point on the second.
  const auto f = CMField::Gauss;
  const auto g = diagonal(f, {CMNumber(f, -1), CMNumber(f, 1)}, {0, 0, Rational(1, 2), 0});
  EXPECT_FALSE(fixed_locus(g).solvable());
  EXPECT_EQ(oracles::grid_fixed_points(long_rows(g.linear()), g.translation().coords(), 4), 0u);
}

TEST(FixedLocus, PositiveDimensional) {
  const auto f = CMField::Gauss;
  const auto g = diagonal(f, {CMNumber(f, -1), CMNumber(f, 1)}, {Rational(1, 2), 0, 0, 0});
  const auto locus = fixed_locus(g);
  ASSERT_TRUE(locus.solvable());
  EXPECT_EQ(locus.dimension(), 1u);
  EXPECT_EQ(locus.component_count(), 4);
  EXPECT_TRUE(locus.isolated_points().empty());
  for (const auto& c : locus.components()) {
    EXPECT_EQ(c.dimension, 1u);
    EXPECT_EQ(g.apply(c.sample), c.sample);
    EXPECT_EQ(c.directions.cols(), 2u);
  }
  EXPECT_TRUE(locus.contains(TorusPoint({Rational(1, 4), 0, Rational(2, 7), Rational(5, 9)})));
  EXPECT_FALSE(locus.contains(TorusPoint({Rational(1, 3), 0, 0, 0})));
  // Oracle: on the grid (1/4)Z, each of the 4 components carries 16 points.
  EXPECT_EQ(oracles::grid_fixed_points(long_rows(g.linear()), g.translation().coords(), 4), 64u);
}

TEST(FixedLocus, DeterminantPropertyOnRandomAutomorphisms) {
  std::mt19937 rng(53);
  const CMField fields[] = {CMField::Gauss, CMField::Eisenstein};
  int checked = 0;
  for (int trial = 0; checked < 500; ++trial) {
    const auto f = fields[trial % 2];
    const unsigned order = f == CMField::Gauss ? 4 : 6;
    std::uniform_int_distribution<unsigned> power(0, order - 1);
    std::uniform_int_distribution<long> num(0, 5);
    const std::size_t d = 1 + trial % 3;
    std::vector<CMNumber> entries;
    for (std::size_t i = 0; i < d; ++i) entries.push_back(unit(f, order).pow(power(rng)));
    CMMatrix a = CMMatrix::diagonal(entries);
    // Mix by a unipotent change of basis to leave the diagonal world.
    if (d >= 2 && trial % 3 == 0) {
      CMMatrix p = CMMatrix::identity(f, d), q = CMMatrix::identity(f, d);
      p(0, 1) = CMNumber(f, 1, 1);
      q(0, 1) = CMNumber(f, -1, -1);
      a = p * a * q;
    }
    std::vector<Rational> t(2 * d);
    for (auto& x : t) {
      x = oracles::ratio(num(rng), 6);
      x.canonicalize();
    }
    const auto g = TorusAutomorphism::from_holomorphic(a, TorusPoint(t));
    const auto m = g.linear() - IntMatrix::identity(2 * d);
    const Rational det = oracles::determinant(rational_rows(m));
    if (det == 0) continue;
    ++checked;
    const auto locus = fixed_locus(g);
    ASSERT_TRUE(locus.solvable());
    EXPECT_EQ(locus.dimension(), 0u);
    EXPECT_EQ(Rational(locus.component_count()), abs(det));
  }
}

TEST(SplittingTest, Examples) {
  EXPECT_TRUE(splitting_test({0, 0}));
  EXPECT_FALSE(splitting_test({Rational(1, 2), 0}));
  EXPECT_TRUE(splitting_test({3, -2}));
}
