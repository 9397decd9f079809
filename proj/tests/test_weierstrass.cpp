#include <gtest/gtest.h>

#include <random>

#include "isotriv/configs.hpp"
#include "isotriv/weierstrass.hpp"
#include "support/oracles.hpp"

using namespace isotriv;
using namespace isotriv::weierstrass;
using kodaira::FibreKind;

namespace {

RationalPolynomial from_roots(const std::vector<std::pair<long, unsigned>>& roots) {
  return RationalPolynomial(oracles::expand_roots(roots));
}

}  // namespace

TEST(Polynomial, ArithmeticAndParse) {
  const auto p = RationalPolynomial::parse("0,1,-3/2");
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coefficient(2), Rational(-3, 2));
  EXPECT_EQ(RationalPolynomial::parse(p.to_coefficient_list()), p);
  EXPECT_TRUE(RationalPolynomial::parse("0,0").is_zero());
  EXPECT_THROW(RationalPolynomial::parse("1,x"), std::invalid_argument);
  const RationalPolynomial t{0, 1};
  const auto [q, r] = (t.pow(3) + RationalPolynomial{1}).divmod(t + RationalPolynomial{1});
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q, (RationalPolynomial{1, -1, 1}));
  EXPECT_EQ(gcd(t.pow(2) * (t - RationalPolynomial{1}), t.pow(3)), t.pow(2));
}

TEST(Polynomial, SquareFreeDecompositionReassembles) {
  const auto p = from_roots({{0, 5}, {1, 4}, {2, 2}, {3, 1}});
  const auto parts = square_free_decomposition(p);
  RationalPolynomial prod{1};
  for (std::size_t i = 0; i < parts.size(); ++i) prod = prod * parts[i].pow(static_cast<unsigned>(i + 1));
  EXPECT_EQ(prod.monic(), p.monic());
}

TEST(Profile, Examples) {
  auto twelve = multiplicity_profile(from_roots({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1},
                                                 {7, 1}, {8, 1}, {9, 1}, {10, 1}, {11, 1}}),
                                     12);
  EXPECT_EQ(twelve.finite_zeros, (std::map<unsigned, unsigned>{{1, 12}}));
  EXPECT_EQ(twelve.infinity_multiplicity, 0u);

  const auto constant = multiplicity_profile(RationalPolynomial{1}, 12);
  EXPECT_TRUE(constant.finite_zeros.empty());
  EXPECT_EQ(constant.infinity_multiplicity, 12u);

  const auto mixed = multiplicity_profile(from_roots({{0, 5}, {1, 4}, {2, 2}, {3, 1}}), 12);
  EXPECT_EQ(mixed.finite_zeros, (std::map<unsigned, unsigned>{{5, 1}, {4, 1}, {2, 1}, {1, 1}}));
  EXPECT_EQ(mixed.total(), 12u);

  EXPECT_THROW(multiplicity_profile(RationalPolynomial{}, 12), WrongJCase);
  EXPECT_THROW(multiplicity_profile(from_roots({{0, 13}}), 12), std::invalid_argument);
}

TEST(Profile, PropertyAgreesWithDerivativeMultiplicities) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> mult(1, 4), count(1, 4);
    std::vector<std::pair<long, unsigned>> roots;
    unsigned total = 0;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
      const unsigned m = static_cast<unsigned>(mult(rng));
      roots.emplace_back(static_cast<long>(3 * i - 4), m);
      total += m;
    }
    const auto coeffs = oracles::expand_roots(roots);
    std::map<unsigned, unsigned> expected;
    for (const auto& [r, m] : roots) ++expected[oracles::root_multiplicity(coeffs, Rational(r))];
    // Scaling by a constant must not matter.
    std::vector<Rational> scaled = coeffs;
    for (auto& c : scaled) c *= Rational(-7, 3);
    const auto profile = multiplicity_profile(RationalPolynomial(scaled), 16);
    EXPECT_EQ(profile.finite_zeros, expected);
    EXPECT_EQ(profile.infinity_multiplicity, 16 - total);
  }
}

TEST(ClassifyZero, Tables) {
  struct Case {
    JCase j;
    unsigned m;
    FibreKind kind;
    int euler;
    std::optional<AdeLabel> sing;
  };
  const Case cases[] = {
      {JCase::Zero, 1, FibreKind::II, 2, std::nullopt},
      {JCase::Zero, 2, FibreKind::IV, 4, AdeLabel::A2},
      {JCase::Zero, 3, FibreKind::I0star, 6, AdeLabel::D4},
      {JCase::Zero, 4, FibreKind::IVstar, 8, AdeLabel::E6},
      {JCase::Zero, 5, FibreKind::IIstar, 10, AdeLabel::E8},
      {JCase::J1728, 1, FibreKind::III, 3, AdeLabel::A1},
      {JCase::J1728, 2, FibreKind::I0star, 6, AdeLabel::D4},
      {JCase::J1728, 3, FibreKind::IIIstar, 9, AdeLabel::E7},
  };
  for (const auto& c : cases) {
    const auto z = classify_zero(c.j, c.m);
    EXPECT_EQ(z.kind, c.kind);
    EXPECT_EQ(z.euler, c.euler);
    EXPECT_EQ(z.singularity, c.sing);
    EXPECT_EQ(z.monodromy.exponent, static_cast<int>(c.m));
    EXPECT_EQ(kodaira::evaluate(z.monodromy), kodaira::fibre_for(c.kind).monodromy);
  }
  EXPECT_THROW(classify_zero(JCase::Zero, 6), NotRationalDoublePoint);
  EXPECT_THROW(classify_zero(JCase::J1728, 4), NotRationalDoublePoint);
  EXPECT_THROW(classify_zero(JCase::Zero, 0), std::invalid_argument);
}

TEST(ClassifySurface, TwelveSimpleZeros) {
  std::vector<std::pair<long, unsigned>> roots;
  for (long r = 0; r < 12; ++r) roots.emplace_back(r, 1);
  const auto rep = classify_surface(JCase::Zero, from_roots(roots));
  EXPECT_TRUE(rep.valid_k3);
  EXPECT_EQ(rep.euler_total, 24);
  EXPECT_EQ(rep.fibres, (std::map<FibreKind, unsigned>{{FibreKind::II, 12}}));
  EXPECT_TRUE(rep.local_singularities.empty());
}

TEST(ClassifySurface, TwoIIIstarOneI0star) {
  const auto rep = classify_surface(JCase::J1728, from_roots({{0, 3}, {1, 3}, {2, 2}}));
  EXPECT_TRUE(rep.valid_k3);
  EXPECT_EQ(rep.euler_total, 24);
  EXPECT_EQ(rep.fibres, (std::map<FibreKind, unsigned>{{FibreKind::I0star, 1}, {FibreKind::IIIstar, 2}}));
}

TEST(ClassifySurface, InfinityCountsAsAZero) {
  // b = t^7: order 7 at 0 and order 5 at infinity.
  const auto rep = classify_surface(JCase::Zero, from_roots({{0, 7}}));
  EXPECT_FALSE(rep.valid_k3);
  ASSERT_TRUE(rep.profile.has_value());
  EXPECT_EQ(rep.profile->infinity_multiplicity, 5u);
  EXPECT_FALSE(rep.reasons.empty());

  const auto constant = classify_surface(JCase::Zero, RationalPolynomial{1});
  EXPECT_FALSE(constant.valid_k3);

  // a = t^3 in the j = 1728 case: infinity has order 5.
  const auto a3 = classify_surface(JCase::J1728, from_roots({{0, 3}}));
  EXPECT_FALSE(a3.valid_k3);
}

TEST(ClassifySurface, NeverThrowsOnBadData) {
  EXPECT_NO_THROW({
    const auto r = classify_surface(JCase::Zero, RationalPolynomial{});
    EXPECT_FALSE(r.valid_k3);
  });
  EXPECT_NO_THROW({
    const auto r = classify_surface(JCase::J1728, from_roots({{0, 9}}));
    EXPECT_FALSE(r.valid_k3);
  });
}

TEST(ClassifySurface, GenericIsFourI0star) {
  const auto rep = classify_surface(JCase::Generic, RationalPolynomial{1});
  EXPECT_EQ(rep.fibres, (std::map<FibreKind, unsigned>{{FibreKind::I0star, 4}}));
  EXPECT_EQ(rep.euler_total, 24);
  EXPECT_TRUE(rep.valid_k3);
}

TEST(ClassifySurface, ValidImpliesEuler24AndExponentsCancel) {
  std::mt19937 rng(29);
  for (JCase j : {JCase::Zero, JCase::J1728}) {
    const unsigned bound = max_zero_order(j);
    const unsigned degree = bundle_degree(j);
    for (int trial = 0; trial < 1000; ++trial) {
      // Random composition of the bundle degree into parts <= bound.
      std::vector<std::pair<long, unsigned>> roots;
      unsigned left = degree;
      long r = 0;
      std::uniform_int_distribution<unsigned> part(1, bound);
      unsigned infinity = 0;
      while (left > 0) {
        const unsigned m = std::min(left, part(rng));
        if (infinity == 0 && rng() % 5 == 0) {
          infinity = m;
        } else {
          roots.emplace_back(r++, m);
        }
        left -= m;
      }
      const auto rep = classify_surface(j, from_roots(roots));
      ASSERT_TRUE(rep.valid_k3);
      EXPECT_EQ(rep.euler_total, 24);
      // All monodromies lie in one cyclic group, so the order is irrelevant.
      sl2z::UnimodularMatrix product;
      for (const auto& [kind, count] : rep.fibres) product *= kodaira::fibre_for(kind).monodromy.pow(count);
      EXPECT_TRUE(product.is_identity());
    }
  }
}

TEST(JInvariant, Examples) {
  EXPECT_EQ(j_invariant_constancy(RationalPolynomial{}, RationalPolynomial{0, 1}).kind, JConstancy::Constant0);
  EXPECT_EQ(j_invariant_constancy(RationalPolynomial{0, 1}, RationalPolynomial{}).kind, JConstancy::Constant1728);
  EXPECT_EQ(j_invariant_constancy(RationalPolynomial{1}, RationalPolynomial{0, 1}).kind, JConstancy::NonConstant);
  EXPECT_THROW(j_invariant_constancy(RationalPolynomial{}, RationalPolynomial{}), NotEllipticFibration);
}

TEST(JInvariant, ConstantOtherCarriesValue) {
  // a = 3 s^2, b = 2 s^3 with s = t + 1: 4a^3 + 27b^2 = 216 s^6, j = 1728 * 108/216.
  const RationalPolynomial s{1, 1};
  const auto r = j_invariant_constancy(s.pow(2) * Rational(3), s.pow(3) * Rational(2));
  EXPECT_EQ(r.kind, JConstancy::ConstantOther);
  ASSERT_TRUE(r.value.has_value());
  EXPECT_EQ(*r.value, Rational(864));
}

TEST(JInvariant, AgreesWithTwoPointEvaluation) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> a(3), b(3);
    for (auto& c : a) c = coeff(rng);
    for (auto& c : b) c = coeff(rng);
    const RationalPolynomial pa(a), pb(b);
    if ((pa.pow(3) * Rational(4) + pb.pow(2) * Rational(27)).is_zero()) continue;
    // j is a ratio of degree <= 6 polynomials: constant iff equal at 14 points.
    std::optional<Rational> first;
    bool constant = true;
    for (long t = 0; t < 40 && constant; ++t) {
      const auto v = oracles::j_value(a, b, Rational(t));
      if (!v) continue;
      if (!first) first = v;
      else if (*v != *first) constant = false;
    }
    const auto r = j_invariant_constancy(pa, pb);
    EXPECT_EQ(r.kind != JConstancy::NonConstant, constant);
  }
}
