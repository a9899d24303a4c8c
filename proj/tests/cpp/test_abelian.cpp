#include <gtest/gtest.h>

#include <set>

#include "brute.hpp"
#include "idemlab/error.hpp"
#include "idemlab/abelian.hpp"
#include "idemlab/corpus.hpp"

using namespace idemlab;

namespace {

// Unimodular search oracle for 2x2: diag entries of SNF are gcd of entries
// and det / gcd.
Int gcd_abs(Int a, Int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

TEST(Smith, DiagonalExample) {
  IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 3}}, 2);
  SmithForm f = smith_normal_form(m);
  EXPECT_EQ(f.diagonal, (std::vector<Int>{1, 6}));
  EXPECT_EQ(f.row_transform * m * f.column_transform, IntMatrix::from_rows({{1, 0}, {0, 6}}, 2));
}

TEST(Smith, RandomSmallMatricesAgreeWithDeterminantalDivisors) {
  for (Int a = -3; a <= 3; ++a) {
    for (Int b = -2; b <= 2; ++b) {
      for (Int c = -2; c <= 2; ++c) {
        for (Int d = -3; d <= 3; d += 2) {
          IntMatrix m = IntMatrix::from_rows({{a, b}, {c, d}}, 2);
          SmithForm f = smith_normal_form(m);
          Int g = gcd_abs(gcd_abs(a, b), gcd_abs(c, d));
          Int det = a * d - b * c;
          det = det < 0 ? -det : det;
          EXPECT_EQ(f.diagonal[0], g);
          EXPECT_EQ(f.diagonal[1], g ? det / g : 0);
          IntMatrix prod = f.row_transform * m * f.column_transform;
          EXPECT_EQ(prod(0, 1), 0);
          EXPECT_EQ(prod(1, 0), 0);
        }
      }
    }
  }
}

TEST(Abelian, InvariantsMatchElementOrderCensus) {
  FiniteGroup g = abelian_group({4, 2});
  EXPECT_EQ(abelian_invariants(g).group.invariant_factors(), (std::vector<Int>{2, 4}));
  auto census = brute::element_order_census(g);
  EXPECT_EQ(census[4], 4u);
  EXPECT_EQ(census[2], 3u);
  EXPECT_EQ(AbelianGroup::from_cyclic_orders({2, 3}).invariant_factors(), std::vector<Int>{6});
  EXPECT_EQ(AbelianGroup::from_cyclic_orders({4, 6, 1}).invariant_factors(), (std::vector<Int>{2, 12}));
}

TEST(Abelian, SubgroupsAndQuotientsOfKlein) {
  AbelianGroup v = AbelianGroup::from_cyclic_orders({2, 2});
  EXPECT_EQ(all_subgroups(v).size(), 5u);
  EXPECT_EQ(brute::subgroups(v.to_group()).size(), 5u);
  auto quots = quot_classes(v);
  EXPECT_EQ(quots.size(), 5u);
  std::multiset<Int> orders;
  for (const auto& q : quots) orders.insert(q.quotient.order());
  EXPECT_EQ(orders, (std::multiset<Int>{1, 2, 2, 2, 4}));
}

TEST(Abelian, SubgroupCountsMatchClosureOracle) {
  for (auto orders : std::vector<std::vector<Int>>{{12}, {2, 4}, {3, 3}, {2, 2, 2}, {4, 4}, {2, 6}}) {
    AbelianGroup a = AbelianGroup::from_cyclic_orders(orders);
    EXPECT_EQ(all_subgroups(a).size(), brute::subgroups(a.to_group()).size()) << a.to_string();
  }
}

TEST(Abelian, KTorsion) {
  AbelianGroup a = AbelianGroup::from_cyclic_orders({2, 4});
  AbelianSubgroup t = k_torsion(a, 2);
  EXPECT_EQ(t.order(), 4);
  EXPECT_EQ(t.isomorphism_type().invariant_factors(), (std::vector<Int>{2, 2}));
  FiniteGroup g = a.to_group();
  std::size_t twos = 0;
  for (Elem x = 0; x < g.order(); ++x) twos += g.mul(x, x) == 0;
  EXPECT_EQ(static_cast<Int>(twos), t.order());
}

TEST(Abelian, Localization) {
  AbelianGroup a = AbelianGroup::from_cyclic_orders({2, 4, 3});
  QuotClass q = s_localize(a, {2});
  EXPECT_EQ(q.quotient.invariant_factors(), std::vector<Int>{3});
  EXPECT_EQ(s_torsion(a, {2}).order(), 8);
}

TEST(Abelian, HomCountsMatchExhaustiveMaps) {
  std::vector<std::vector<Int>> shapes = {{2}, {3}, {4}, {2, 2}, {6}};
  for (const auto& x : shapes) {
    for (const auto& y : shapes) {
      AbelianGroup a = AbelianGroup::from_cyclic_orders(x), b = AbelianGroup::from_cyclic_orders(y);
      EXPECT_EQ(hom_count_abelian(a, b), static_cast<Int>(brute::all_homs(a.to_group(), b.to_group()).size()))
          << a.to_string() << " -> " << b.to_string();
    }
  }
  EXPECT_EQ(hom_count_abelian(AbelianGroup::from_cyclic_orders({2, 2}), AbelianGroup::from_cyclic_orders({2})), 4);
}

TEST(Abelian, OrderThreeAutomorphismOfKleinFixesTwoSubgroups) {
  AbelianGroup v = AbelianGroup::from_cyclic_orders({2, 2});
  IntMatrix m = IntMatrix::from_rows({{0, 1}, {1, 1}}, 2);
  auto fixed = invariant_subgroups(v, {m});
  ASSERT_EQ(fixed.size(), 2u);
  EXPECT_EQ(fixed[0].order(), 1);
  EXPECT_EQ(fixed[1].order(), 4);
  // Oracle: apply the matrix to each order-2 subgroup by hand.
  std::size_t moved = 0;
  for (std::vector<Int> x : {std::vector<Int>{1, 0}, {0, 1}, {1, 1}}) {
    std::vector<Int> y = {(x[0] * m(0, 0) + x[1] * m(1, 0)) % 2, (x[0] * m(0, 1) + x[1] * m(1, 1)) % 2};
    moved += y != x;
  }
  EXPECT_EQ(moved, 3u);
}
