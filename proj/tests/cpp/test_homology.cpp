#include <gtest/gtest.h>

#include <set>

#include "brute.hpp"
#include "idemlab/error.hpp"
#include "idemlab/corpus.hpp"
#include "idemlab/grpcore.hpp"
#include "idemlab/homology.hpp"

using namespace idemlab;

namespace {

// |H²(G, Z/m)| by listing every normalized cochain: only for tiny G.
std::size_t brute_h2_order(const FiniteGroup& g, Int m) {
  const std::size_t n = g.order();
  const std::size_t free = (n - 1) * (n - 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < free; ++i) total *= static_cast<std::size_t>(m);
  auto value = [&](std::size_t code, Elem a, Elem b) -> Int {
    if (a == 0 || b == 0) return 0;
    std::size_t idx = (a - 1) * (n - 1) + (b - 1);
    for (std::size_t i = 0; i < idx; ++i) code /= static_cast<std::size_t>(m);
    return static_cast<Int>(code % static_cast<std::size_t>(m));
  };
  std::size_t cocycles = 0;
  for (std::size_t code = 0; code < total; ++code) {
    bool ok = true;
    for (Elem a = 1; a < n && ok; ++a) {
      for (Elem b = 1; b < n && ok; ++b) {
        for (Elem c = 1; c < n && ok; ++c) {
          Int lhs = value(code, b, c) + value(code, a, g.mul(b, c));
          Int rhs = value(code, g.mul(a, b), c) + value(code, a, b);
          ok = (lhs - rhs) % m == 0;
        }
      }
    }
    cocycles += ok;
  }
  // Coboundaries of normalized 1-cochains u: f(a,b) = u(a) + u(b) - u(ab).
  std::set<std::vector<Int>> boundaries;
  std::size_t ucount = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) ucount *= static_cast<std::size_t>(m);
  for (std::size_t code = 0; code < ucount; ++code) {
    std::vector<Int> u(n, 0);
    std::size_t c = code;
    for (std::size_t i = 1; i < n; ++i) {
      u[i] = static_cast<Int>(c % static_cast<std::size_t>(m));
      c /= static_cast<std::size_t>(m);
    }
    std::vector<Int> f;
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) f.push_back(((u[a] + u[b] - u[g.mul(a, b)]) % m + m) % m);
    }
    boundaries.insert(f);
  }
  return cocycles / boundaries.size();
}

}  // namespace

TEST(Homology, CyclicGroupsHaveTrivialMultiplier) {
  for (std::size_t n = 1; n <= 16; ++n) EXPECT_TRUE(schur_multiplier(cyclic_group(n)).is_trivial()) << n;
}

TEST(Homology, SmallMultipliers) {
  EXPECT_EQ(schur_multiplier(abelian_group({2, 2})).invariant_factors(), std::vector<Int>{2});
  EXPECT_TRUE(schur_multiplier(symmetric_group(3)).is_trivial());
  EXPECT_TRUE(schur_multiplier(quaternion_group()).is_trivial());
  EXPECT_EQ(schur_multiplier(dihedral_group(4)).invariant_factors(), std::vector<Int>{2});
  EXPECT_EQ(schur_multiplier(alternating_group(4)).invariant_factors(), std::vector<Int>{2});
  EXPECT_EQ(schur_multiplier(abelian_group({2, 2, 2})).invariant_factors(), (std::vector<Int>{2, 2, 2}));
  EXPECT_EQ(schur_multiplier(abelian_group({4, 4})).invariant_factors(), std::vector<Int>{4});
  EXPECT_EQ(schur_multiplier(alternating_group(5)).invariant_factors(), std::vector<Int>{2});
}

TEST(Homology, CohomologyOrdersMatchCochainEnumeration) {
  struct Case {
    FiniteGroup g;
    Int m;
  };
  for (const Case& c : {Case{cyclic_group(2), 2}, Case{cyclic_group(3), 3}, Case{abelian_group({2, 2}), 2},
                        Case{cyclic_group(4), 2}, Case{cyclic_group(4), 4}}) {
    EXPECT_EQ(static_cast<std::size_t>(cohomology_order(c.g, c.m)), brute_h2_order(c.g, c.m))
        << c.g.name() << " mod " << c.m;
  }
}

TEST(Homology, LocalizedMultiplier) {
  LocalizedH2 a4 = h2_loc(alternating_group(4));
  EXPECT_EQ(a4.h1.invariant_factors(), std::vector<Int>{3});
  EXPECT_EQ(a4.group().invariant_factors(), std::vector<Int>{2});
  LocalizedH2 v = h2_loc(abelian_group({2, 2}));
  EXPECT_TRUE(v.group().is_trivial());
  LocalizedH2 s4 = h2_loc(symmetric_group(4));
  EXPECT_TRUE(s4.group().is_trivial());
}

TEST(Homology, CocycleClassesOfZ2ByZ2) {
  auto classes = two_cocycle_classes(cyclic_group(2), AbelianGroup::from_cyclic_orders({2}));
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_TRUE(classes[0].is_zero());
  for (const auto& f : classes) check_cocycle(f);
  CentralExtension split = build_central_extension(classes[0]);
  CentralExtension ext = build_central_extension(classes[1]);
  EXPECT_EQ(brute::element_order_census(split.total)[4], 0u);
  EXPECT_EQ(brute::element_order_census(ext.total)[4], 2u);
  check_associative(ext.total);
}

TEST(Homology, DoubleCoverOfA5) {
  FiniteGroup a5 = alternating_group(5);
  auto classes = two_cocycle_classes(a5, AbelianGroup::from_cyclic_orders({2}));
  ASSERT_EQ(classes.size(), 2u);
  CentralExtension ext = build_central_extension(classes[1]);
  EXPECT_EQ(ext.total.order(), 120u);
  EXPECT_TRUE(abelianization(ext.total).h1.is_trivial());
  EXPECT_TRUE(is_stem(ext));
  for (const Subgroup& s : subgroups(ext.total)) EXPECT_NE(s.order(), 60u);
  for (Elem x = 0; x < ext.total.order(); ++x) {
    for (Elem y = 0; y < ext.total.order(); ++y) {
      EXPECT_EQ(ext.projection(ext.total.mul(x, y)), a5.mul(ext.projection(x), ext.projection(y)));
    }
  }
}

TEST(Homology, CocycleClassCountsFollowUniversalCoefficients) {
  // |H²(G,K)| = |Hom(H₂,K)|·|Ext(H₁,K)|, and Ext(Z/a, Z/b) ≅ Z/gcd(a,b).
  struct Case {
    FiniteGroup g;
    std::vector<Int> k;
    std::size_t expected;
  };
  for (const Case& c : {Case{symmetric_group(3), {2}, 2}, Case{symmetric_group(3), {3}, 1},
                        Case{abelian_group({2, 2}), {2}, 8}, Case{quaternion_group(), {2}, 4},
                        Case{alternating_group(4), {6}, 6}}) {
    EXPECT_EQ(two_cocycle_classes(c.g, AbelianGroup::from_cyclic_orders(c.k)).size(), c.expected) << c.g.name();
  }
}
