#include <gtest/gtest.h>

#include "idemlab/corpus.hpp"
#include "idemlab/covers.hpp"
#include "idemlab/error.hpp"
#include "idemlab/grpcore.hpp"

using namespace idemlab;

class CoversTest : public ::testing::Test {
 protected:
  Session session;
};

TEST_F(CoversTest, SurjectiveClassesOfA5) {
  auto classes = sur_gensub_classes(alternating_group(5), session);
  ASSERT_EQ(classes.size(), 2u);
  for (const auto& c : classes) {
    EXPECT_TRUE(c.is_surjective);
    EXPECT_TRUE(c.is_generalized_subgroup);
    EXPECT_TRUE(c.is_cellular_cover);
    EXPECT_EQ(c.is_cellular_cover, is_cellular_cover(c.representative));
    EXPECT_EQ(c.is_generalized_subgroup, is_generalized_subgroup(c.representative));
  }
  EXPECT_EQ(sur_cov_classes(alternating_group(5), session).size(), 2u);
}

TEST_F(CoversTest, DifferentialKernels) {
  FiniteGroup a5 = alternating_group(5);
  FiniteGroup sl = sl2_5();
  GroupHom c = enumerate_homs(sl, a5).homs.back();
  ASSERT_TRUE(c.is_surjective());
  EXPECT_EQ(differential_kernel(c, session).order(), 1);
  AbelianSubgroup whole = differential_kernel(GroupHom::identity(a5), session);
  EXPECT_EQ(whole.order(), 2);
}

TEST_F(CoversTest, InitialCovers) {
  CoverClass a5 = initial_cover(alternating_group(5), session);
  EXPECT_EQ(a5.representative.domain().order(), 120u);
  EXPECT_TRUE(are_isomorphic(a5.representative.domain(), sl2_5()));
  EXPECT_EQ(initial_cover(cyclic_group(6), session).representative.domain().order(), 6u);
  EXPECT_EQ(initial_cover(symmetric_group(3), session).representative.domain().order(), 6u);
  CoverClass a4 = initial_cover(alternating_group(4), session);
  EXPECT_EQ(a4.representative.domain().order(), 24u);
}

TEST_F(CoversTest, GeneralizedSubgroupClasses) {
  EXPECT_EQ(gensub_classes(cyclic_group(12), session).entries.size(), 6u);
  EXPECT_EQ(gensub_classes(trivial_group(), session).entries.size(), 1u);
  // 59 subgroups, plus the double covers over the five A4 and over A5
  EXPECT_EQ(gensub_classes(alternating_group(5), session).entries.size(), 65u);
  auto maps = gensub_cover_classes(alternating_group(4), session);
  for (const auto& c : maps) {
    EXPECT_TRUE(c.is_generalized_subgroup);
    EXPECT_TRUE(is_generalized_subgroup(c.representative));
  }
}

TEST_F(CoversTest, OutActionOnA5IsTrivial) {
  OutAction act = out_action_on_classes(alternating_group(5), session);
  EXPECT_TRUE(act.inner_acts_trivially);
  EXPECT_EQ(act.fixed.size(), 2u);
  EXPECT_EQ(act.permutations.size(), 2u);
}

TEST_F(CoversTest, IdemSizes) {
  for (std::size_t p : {2u, 3u, 5u}) EXPECT_EQ(idem_set(cyclic_group(p), session).size(), 2u);
  EXPECT_EQ(idem_set(alternating_group(5), session).size(), 3u);
  EXPECT_EQ(idem_set(trivial_group(), session).size(), 1u);
  EXPECT_EQ(idem_set(cyclic_group(12), session).size(), 6u);
}

TEST_F(CoversTest, IdemIterationOfPrimeCyclic) {
  IdemIteration it = idem_inf(cyclic_group(5), session);
  EXPECT_EQ(it.stabilized_at, 1u);
  EXPECT_EQ(it.levels.back().size(), 2u);
}

TEST_F(CoversTest, IdemIterationOfA5) {
  IdemIteration two = idem_iter(alternating_group(5), 2, session);
  ASSERT_EQ(two.levels.size(), 2u);
  EXPECT_EQ(two.levels[0].size(), 3u);
  EXPECT_EQ(two.levels[1].size(), 4u);
  EXPECT_TRUE(two.stabilized);
  EXPECT_EQ(two.stabilized_at, 2u);
}

TEST_F(CoversTest, DepthCheckForSimpleAndCyclicGroups) {
  DepthReport a5 = iterated_gensub_depth_check(alternating_group(5), session);
  EXPECT_TRUE(a5.composites_ok);
  EXPECT_TRUE(a5.stabilized_in_bound);
  EXPECT_LE(a5.stabilized_at, 2u);
  DepthReport z8 = iterated_gensub_depth_check(cyclic_group(8), session);
  EXPECT_EQ(z8.stabilized_at, 1u);
}

TEST(CoversLimits, CapsAreChecked) {
  Limits lim;
  lim.h2_cap = 10;
  Session s(lim);
  EXPECT_THROW(sur_gensub_classes(alternating_group(5), s), CapExceeded);
  Limits bad;
  bad.order_cap = 0;
  EXPECT_THROW(Session{bad}, InvalidInput);
}
