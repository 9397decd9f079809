#include <gtest/gtest.h>

#include "isotriv/kodaira.hpp"
#include "isotriv/weierstrass.hpp"

using namespace isotriv;
using namespace isotriv::kodaira;

TEST(Kodaira, SevenFiniteRows) {
  struct Row {
    FibreKind kind;
    const char* dynkin;
    int euler;
    sl2z::UnimodularMatrix monodromy;
    unsigned order;
  };
  const auto a = sl2z::alpha();
  const auto b = sl2z::beta();
  const Row rows[] = {
      {FibreKind::II, "~A0", 2, a, 6},           {FibreKind::III, "~A1", 3, b, 4},
      {FibreKind::IV, "~A2", 4, a.pow(2), 3},    {FibreKind::I0star, "~D4", 6, a.pow(3), 2},
      {FibreKind::IIstar, "~E8", 10, a.pow(5), 6}, {FibreKind::IIIstar, "~E7", 9, b.pow(3), 4},
      {FibreKind::IVstar, "~E6", 8, a.pow(4), 3},
  };
  ASSERT_EQ(standard_table().rows.size(), 7u);
  for (const auto& r : rows) {
    const auto f = fibre_for(r.kind);
    EXPECT_EQ(f.dynkin, r.dynkin);
    EXPECT_EQ(f.euler, r.euler);
    EXPECT_EQ(f.monodromy, r.monodromy);
    EXPECT_EQ(f.monodromy_order, r.order);
    EXPECT_EQ(sl2z::order(f.monodromy), f.monodromy_order);
    EXPECT_EQ(evaluate(f.power), f.monodromy);
  }
}

TEST(Kodaira, I0starIsMinusIdentityInBothFamilies) {
  EXPECT_TRUE(fibre_for(FibreKind::I0star).monodromy.is_minus_identity());
  EXPECT_EQ(sl2z::beta().pow(2), fibre_for(FibreKind::I0star).monodromy);
}

TEST(Kodaira, StarredTypes) {
  const auto s = starred_types();
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[0].kind, FibreKind::I0star);
  EXPECT_EQ(s[1].kind, FibreKind::IVstar);
  EXPECT_EQ(s[2].kind, FibreKind::IIIstar);
  EXPECT_EQ(s[3].kind, FibreKind::IIstar);
  int sum = 0;
  for (const auto& f : s) {
    sum += f.euler;
    EXPECT_TRUE(f.is_starred());
    EXPECT_EQ(f.monodromy_order, sl2z::order(f.monodromy));
  }
  EXPECT_EQ(sum, 33);
}

TEST(Kodaira, SmoothAndSemistable) {
  const auto i0 = fibre_for(FibreKind::I0);
  EXPECT_EQ(i0.euler, 0);
  EXPECT_TRUE(i0.monodromy.is_identity());
  const auto i3 = semistable_fibre(3);
  EXPECT_EQ(i3.euler, 3);
  EXPECT_FALSE(i3.has_finite_monodromy());
  EXPECT_EQ(i3.monodromy, sl2z::UnimodularMatrix(1, 3, 0, 1));
  EXPECT_THROW(fibre_for(FibreKind::In), std::invalid_argument);
}

TEST(Kodaira, Names) {
  EXPECT_EQ(parse_kind("IVstar"), FibreKind::IVstar);
  EXPECT_EQ(parse_kind("IV*"), FibreKind::IVstar);
  EXPECT_EQ(display_name(FibreKind::I0star), "I0*");
  EXPECT_THROW(parse_kind("V"), std::invalid_argument);
  EXPECT_EQ(fibre_for("II*").euler, 10);
}

TEST(Kodaira, EulerMatchesZeroOrders) {
  // Euler number is 2m (j = 0) or 3m (j = 1728) for a zero of order m.
  for (unsigned m = 1; m <= 5; ++m) {
    const auto z = weierstrass::classify_zero(weierstrass::JCase::Zero, m);
    EXPECT_EQ(fibre_for(z.kind).euler, static_cast<int>(2 * m));
  }
  for (unsigned m = 1; m <= 3; ++m) {
    const auto z = weierstrass::classify_zero(weierstrass::JCase::J1728, m);
    EXPECT_EQ(fibre_for(z.kind).euler, static_cast<int>(3 * m));
  }
}

TEST(Kodaira, TableJson) {
  const auto j = table_json(standard_table());
  ASSERT_EQ(j.size(), 7u);
  EXPECT_EQ(j[6]["Kodaira type"], "IVstar");
  EXPECT_EQ(j[6]["Euler number"], 8);
  EXPECT_EQ(j[6]["monodromy"], "alpha^4");
  EXPECT_EQ(j[6]["order"], "3");
}
