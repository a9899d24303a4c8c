#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "brute.hpp"
#include "idemlab/error.hpp"
#include "idemlab/corpus.hpp"
#include "idemlab/grpcore.hpp"
#include "idemlab/homcache.hpp"
#include "idemlab/homlab.hpp"

using namespace idemlab;

namespace {

std::filesystem::path temp_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() /
             ("idemlab-test-" + tag + "-" + std::to_string(std::random_device{}()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Homlab, CountsMatchExhaustiveFunctions) {
  std::vector<FiniteGroup> small = {cyclic_group(2), cyclic_group(3), cyclic_group(4), abelian_group({2, 2}),
                                    symmetric_group(3)};
  for (const auto& x : small) {
    for (const auto& g : small) {
      if (x.order() > 4 && g.order() > 4) continue;
      auto oracle = brute::all_homs(x, g);
      auto set = enumerate_homs(x, g);
      EXPECT_EQ(set.size(), oracle.size()) << x.name() << " -> " << g.name();
      std::set<std::vector<Elem>> mine;
      for (const auto& h : set.homs) mine.insert({h.map().begin(), h.map().end()});
      EXPECT_EQ(mine, std::set<std::vector<Elem>>(oracle.begin(), oracle.end()));
    }
  }
}

TEST(Homlab, EndomorphismsOfA5) {
  FiniteGroup a5 = alternating_group(5);
  EXPECT_EQ(count_homs(a5, a5), 121u);
  AutomorphismGroup aut = automorphisms(a5);
  EXPECT_EQ(aut.all.size(), 120u);
  EXPECT_EQ(aut.inner_count(), 60u);
  EXPECT_EQ(aut.outer_representatives.size(), 2u);
  EXPECT_EQ(aut.inner_count(), a5.order() / center(a5).order());
}

TEST(Homlab, SmallCounts) {
  EXPECT_EQ(count_homs(cyclic_group(4), cyclic_group(6)), 2u);
  EXPECT_EQ(count_homs(quaternion_group(), cyclic_group(2)), 4u);
  EXPECT_EQ(count_homs(alternating_group(5), cyclic_group(7)), 1u);
  EXPECT_TRUE(is_hom_trivial_set(alternating_group(5), symmetric_group(3)));
  EXPECT_EQ(count_homs(symmetric_group(4), symmetric_group(3)), 10u);
}

TEST(Homlab, BudgetExceededIsReported) {
  SearchOptions o;
  o.budget = 10;
  EXPECT_THROW(count_homs(abelian_group({2, 2, 2, 2}), abelian_group({2, 2, 2, 2}), o), BudgetExceeded);
}

TEST(Homlab, GeneralizedSubgroupTestsAgree) {
  FiniteGroup sl = sl2_5();
  FiniteGroup a5 = alternating_group(5);
  auto onto = enumerate_homs(sl, a5);
  std::size_t surjective = 0;
  for (const auto& h : onto.homs) {
    EXPECT_EQ(is_generalized_subgroup(h, GensubMethod::Brute), structural_gensub(h));
    if (h.is_surjective()) {
      ++surjective;
      EXPECT_TRUE(is_generalized_subgroup(h));
      EXPECT_TRUE(is_cellular_cover(h));
    }
  }
  EXPECT_EQ(surjective, 120u);
  GroupHom quotient_map = enumerate_homs(cyclic_group(4), cyclic_group(2)).homs.back();
  EXPECT_FALSE(is_generalized_subgroup(quotient_map));
  EXPECT_FALSE(structural_gensub(quotient_map));
}

TEST(Homlab, CoverEquivalenceUnderAutomorphisms) {
  FiniteGroup sl = sl2_5();
  FiniteGroup a5 = alternating_group(5);
  GroupHom c = enumerate_homs(sl, a5).homs.back();
  ASSERT_TRUE(c.is_surjective());
  std::size_t fixing = 0;
  for (const GroupHom& h : automorphisms(sl).all) {
    GroupHom twisted = compose(c, h);
    EXPECT_TRUE(covers_equivalent(twisted, c));
    fixing += std::equal(twisted.map().begin(), twisted.map().end(), c.map().begin());
  }
  EXPECT_EQ(fixing, 1u);
  EXPECT_FALSE(covers_equivalent(c, GroupHom::identity(a5)));
}

TEST(Homlab, IsomorphismSearch) {
  EXPECT_TRUE(are_isomorphic(symmetric_group(3), dihedral_group(3)));
  EXPECT_FALSE(are_isomorphic(quaternion_group(), dihedral_group(4)));
  EXPECT_TRUE(are_isomorphic(named_group("SL2_5"), sl2_5()));
}

TEST(HomCache, DiskRoundTripGivesTheSameSets) {
  auto dir = temp_dir("homs");
  FiniteGroup s4 = symmetric_group(4), s3 = symmetric_group(3);
  HomStore first(dir);
  SearchOptions o;
  auto a = first.homs(s4, s3, o);
  EXPECT_EQ(first.count(s4, s4, o), count_homs(s4, s4));
  EXPECT_EQ(first.stats().computed, 2u);
  HomStore second(dir);
  auto b = second.homs(s4, s3, o);
  EXPECT_EQ(second.count(s4, s4, o), count_homs(s4, s4));
  EXPECT_EQ(second.stats().disk_hits, 2u);
  EXPECT_EQ(second.stats().computed, 0u);
  ASSERT_EQ(a->size(), b->size());
  for (std::size_t i = 0; i < a->size(); ++i) {
    EXPECT_TRUE(std::equal(a->homs[i].map().begin(), a->homs[i].map().end(), b->homs[i].map().begin()));
  }
  std::filesystem::remove_all(dir);
}

TEST(HomCache, CappedCountsAreLowerBounds) {
  auto dir = temp_dir("counts");
  FiniteGroup v = abelian_group({2, 2, 2});
  HomStore store(dir);
  SearchOptions o;
  EXPECT_EQ(store.count(v, v, o, 5), 5u);
  EXPECT_EQ(store.count(v, v, o), 512u);
  EXPECT_EQ(store.count(v, v, o, 5), 5u);
  std::filesystem::remove_all(dir);
}
