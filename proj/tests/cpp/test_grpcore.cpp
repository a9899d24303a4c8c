#include <gtest/gtest.h>

#include "brute.hpp"
#include "idemlab/corpus.hpp"
#include "idemlab/error.hpp"
#include "idemlab/group_io.hpp"
#include "idemlab/grpcore.hpp"

using namespace idemlab;

TEST(GroupIo, PermutationSpecClosesToA5) {
  FiniteGroup g = load_group(parse_group_spec("group A5\ndegree 5\ngen (0 1 2 3 4), (0 1 2)\n"));
  EXPECT_EQ(g.order(), 60u);
  EXPECT_EQ(brute::closure(g, {g.generators().begin(), g.generators().end()}).size(), 60u);
  check_associative(g);
}

TEST(GroupIo, CyclicSpecIsPowersOfOneGenerator) {
  FiniteGroup g = load_group(parse_group_spec("group C12\ndegree 12\ngen (0 1 2 3 4 5 6 7 8 9 10 11)\n"));
  ASSERT_EQ(g.order(), 12u);
  bool cyclic = false;
  for (Elem x = 0; x < g.order(); ++x) cyclic |= brute::element_order(g, x) == 12;
  EXPECT_TRUE(cyclic);
}

TEST(GroupIo, TableSpecRoundTrip) {
  FiniteGroup g = load_group(parse_group_spec("group V\ntable 4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n"));
  EXPECT_EQ(g.order(), 4u);
  EXPECT_TRUE(g.is_abelian());
}

TEST(GroupIo, TableWithNonzeroIdentityIsRelabelled) {
  FiniteGroup g = load_group(parse_group_spec("group Z2\ntable 2\n1 0\n0 1\n"));
  EXPECT_EQ(g.mul(0, 1), 1u);
  EXPECT_EQ(g.mul(1, 1), 0u);
}

TEST(GroupIo, ParseErrorsCarryLineNumbers) {
  try {
    parse_group_spec("group X\ndegree 3\ngen (0 1 7)\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    parse_group_spec("group X\nbogus 3\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(load_group(parse_group_spec("group Bad\ntable 2\n0 1\n1 1\n")), InvalidInput);
  EXPECT_THROW(parse_group_spec("group X\ndegree 3\ngen (0 1\n"), ParseError);
  EXPECT_THROW(parse_group_spec("group X\ndegree 3\ngen (0 1),\n"), ParseError);
}

TEST(GroupIo, OrderCapIsEnforced) {
  EXPECT_THROW(load_group(parse_group_spec("group S6\ndegree 6\ngen (0 1 2 3 4 5)\ngen (0 1)\n"), 100), CapExceeded);
}

TEST(Grpcore, CenterOfA5IsTrivial) {
  FiniteGroup a5 = alternating_group(5);
  EXPECT_TRUE(center(a5).is_trivial());
  std::size_t central = 0;
  for (Elem z = 0; z < a5.order(); ++z) {
    bool ok = true;
    for (Elem x = 0; x < a5.order(); ++x) ok &= a5.mul(z, x) == a5.mul(x, z);
    central += ok;
  }
  EXPECT_EQ(central, 1u);
}

TEST(Grpcore, CommutatorSubgroups) {
  FiniteGroup a5 = alternating_group(5);
  EXPECT_TRUE(derived_subgroup(a5).is_whole());
  FiniteGroup s3 = symmetric_group(3);
  Subgroup d = derived_subgroup(s3);
  EXPECT_EQ(d.order(), 3u);
  std::vector<Elem> comms;
  for (Elem a = 0; a < s3.order(); ++a) {
    for (Elem b = 0; b < s3.order(); ++b) comms.push_back(s3.commutator(a, b));
  }
  EXPECT_EQ(brute::closure(s3, comms).size(), 3u);
}

TEST(Grpcore, LowerCentralSeries) {
  auto d4 = lower_central_series(dihedral_group(4));
  ASSERT_GE(d4.size(), 2u);
  for (std::size_t i = 1; i < d4.size(); ++i) EXPECT_LT(d4[i].order(), d4[i - 1].order());
  EXPECT_TRUE(d4.back().is_trivial());
  auto a5 = lower_central_series(alternating_group(5));
  for (const auto& t : a5) EXPECT_EQ(t.order(), 60u);
}

TEST(Grpcore, StructureFlags) {
  FiniteGroup s3 = symmetric_group(3);
  EXPECT_TRUE(is_solvable(s3));
  EXPECT_FALSE(is_nilpotent(s3));
  EXPECT_TRUE(is_nilpotent(quaternion_group()));
  EXPECT_TRUE(is_simple(alternating_group(5)));
  EXPECT_TRUE(is_perfect(alternating_group(5)));
  EXPECT_FALSE(is_solvable(alternating_group(5)));
  EXPECT_TRUE(is_simple(cyclic_group(7)));
  EXPECT_FALSE(is_simple(alternating_group(4)));
}

TEST(Grpcore, SubgroupCensusMatchesClosureOracle) {
  for (const FiniteGroup& g : {symmetric_group(3), alternating_group(4), dihedral_group(4), quaternion_group(),
                               cyclic_group(12), abelian_group({2, 2, 2})}) {
    auto subs = subgroups(g);
    std::set<std::vector<Elem>> mine;
    for (const auto& s : subs) mine.insert({s.elements().begin(), s.elements().end()});
    EXPECT_EQ(mine, brute::subgroups(g)) << g.name();
  }
  EXPECT_EQ(subgroups(alternating_group(5)).size(), 59u);
  EXPECT_EQ(normal_subgroups(alternating_group(5)).size(), 2u);
  EXPECT_EQ(normal_subgroups(symmetric_group(4)).size(), 4u);
}

TEST(Grpcore, CompositionLength) {
  EXPECT_EQ(composition_length(alternating_group(5)), 1u);
  EXPECT_EQ(composition_length(symmetric_group(4)), 4u);
  EXPECT_EQ(composition_length(cyclic_group(12)), 3u);
  EXPECT_EQ(composition_length(trivial_group()), 0u);
}

TEST(Grpcore, QuotientAndAbelianization) {
  FiniteGroup s4 = symmetric_group(4);
  auto ab = abelianization(s4);
  EXPECT_EQ(ab.h1.invariant_factors(), std::vector<Int>{2});
  EXPECT_EQ(abelianization(symmetric_group(3)).h1.invariant_factors(), std::vector<Int>{2});
  EXPECT_TRUE(abelianization(alternating_group(5)).h1.is_trivial());
  Quotient q = quotient(s4, derived_subgroup(s4));
  EXPECT_EQ(q.group.order(), 2u);
  check_associative(q.group);
  for (Elem a = 0; a < s4.order(); ++a) {
    for (Elem b = 0; b < s4.order(); ++b) {
      EXPECT_EQ(q.projection(s4.mul(a, b)), q.group.mul(q.projection(a), q.projection(b)));
    }
  }
}

TEST(Corpus, NamedGroupsHaveTheRightShape) {
  FiniteGroup q8 = quaternion_group();
  EXPECT_EQ(q8.order(), 8u);
  auto census = brute::element_order_census(q8);
  EXPECT_EQ(census[1], 1u);
  EXPECT_EQ(census[2], 1u);
  EXPECT_EQ(census[4], 6u);
  EXPECT_EQ(psl2_7().order(), 168u);
  EXPECT_TRUE(is_simple(psl2_7()));
  FiniteGroup sl = sl2_5();
  EXPECT_EQ(sl.order(), 120u);
  EXPECT_TRUE(is_perfect(sl));
  EXPECT_EQ(center(sl).order(), 2u);
  EXPECT_EQ(named_group("D4").order(), 8u);
  EXPECT_THROW(named_group("nonsense"), InvalidInput);
}

TEST(Corpus, GroupCountsByOrder) {
  const std::vector<std::size_t> expected = {1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15};
  for (std::size_t n = 1; n <= expected.size(); ++n) EXPECT_EQ(groups_of_order(n).size(), expected[n - 1]) << n;
  EXPECT_EQ(p_groups(2, 5).size(), 51u);
  EXPECT_EQ(p_groups(3, 3).size(), 5u);
}

TEST(Corpus, GroupsOfOrderArePairwiseNonisomorphic) {
  for (std::size_t n : {8u, 12u, 16u}) {
    auto gs = groups_of_order(n);
    for (std::size_t i = 0; i < gs.size(); ++i) {
      check_associative(gs[i]);
      for (std::size_t j = i + 1; j < gs.size(); ++j) EXPECT_FALSE(are_isomorphic(gs[i], gs[j])) << n;
    }
  }
}
