#include "oracles.hpp"

#include "coverspec/error.hpp"
#include "coverspec/group.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace coverspec;

TEST(Perm, ProductAppliesRightFactorFirst) {
  const Perm a = Perm::from_cycles(3, {{0, 1}});
  const Perm b = Perm::from_cycles(3, {{1, 2}});
  const Perm ab = a * b;
  EXPECT_EQ(ab[1], a[b[1]]);
  EXPECT_EQ(ab.to_string(), "(0 1 2)");
  EXPECT_EQ(ab.order(), 3u);
  EXPECT_EQ((ab * ab.inverse()).is_identity(), true);
  EXPECT_THROW(Perm({0, 0, 1}), Error);
}

TEST(Perm, CycleType) {
  const Perm p = Perm::from_cycles(6, {{0, 1, 2}, {3, 4}});
  EXPECT_EQ(p.cycle_type(), (std::vector<unsigned>{3, 2, 1}));
  EXPECT_EQ(p.pow(3), Perm::from_cycles(6, {{3, 4}}));
}

TEST(Group, ClosureOrders) {
  const FiniteGroup s4 = FiniteGroup::generate(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{1, 2, 3}})});
  EXPECT_EQ(s4.order(), 24u);
  EXPECT_EQ(psl2(7).order(), 168u);
  EXPECT_EQ(psl2(19).order(), 3420u);
  EXPECT_EQ(alt(5).order(), 60u);
  EXPECT_EQ(dihedral(5).order(), 10u);
  EXPECT_EQ(quaternion8().order(), 8u);
  EXPECT_EQ(cyclic_product({3, 3}).order(), 9u);
  EXPECT_THROW(FiniteGroup::generate(7, {Perm::from_cycles(7, {{0, 1}}), Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}})}, 100),
               Error);
  EXPECT_THROW(psl2(9), Error);
}

TEST(Group, ElementsMatchIndependentClosure) {
  for (const auto& g : {sym(4), alt(5), psl2(7), quaternion8(), dihedral(6)}) {
    std::set<oracle::Images> mine;
    for (const auto& p : g.elements()) mine.insert(p.images());
    const auto theirs = oracle::elements_of(g);
    EXPECT_EQ(mine, std::set<oracle::Images>(theirs.begin(), theirs.end())) << g.label();
  }
}

TEST(Group, ClassesMatchBruteForceConjugation) {
  for (const auto& g : {sym(4), alt(4), alt(5), sym(5), psl2(7), quaternion8(), dihedral(4), cyclic_product({2, 4})}) {
    const auto classes = oracle::conjugacy_classes(oracle::elements_of(g));
    ASSERT_EQ(classes.size(), g.classes().size()) << g.label();
    for (const auto& c : g.classes()) {
      std::set<oracle::Images> members;
      for (auto i : g.class_members(c.id)) members.insert(g.element(i).images());
      EXPECT_NE(std::find(classes.begin(), classes.end(), members), classes.end()) << g.label() << " " << c.name;
      EXPECT_EQ(members.size(), c.size);
    }
  }
}

TEST(Group, S4ClassSizes) {
  const FiniteGroup g = sym(4);
  std::multiset<std::size_t> sizes;
  for (const auto& c : g.classes()) sizes.insert(c.size);
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 6, 3, 8, 6}));
  EXPECT_EQ(g.classes().front().name, "[1^4]");
  EXPECT_EQ(psl2(7).classes().size(), 6u);
  EXPECT_EQ(psl2(19).classes().size(), 12u);
}

TEST(Group, ClassLookupByName) {
  const FiniteGroup s6 = sym(6);
  const auto& c6 = s6.classes()[s6.class_by_name("[6^1]")];
  EXPECT_EQ(c6.size, 120u);
  EXPECT_EQ(c6.representative, Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}}));
  const FiniteGroup s5 = sym(5);
  EXPECT_EQ(s5.classes()[s5.class_by_name("[2^1,1^3]")].size, 10u);
  EXPECT_EQ(s5.class_by_name("[2^1]"), s5.class_by_name("[2,1,1,1]"));
  const FiniteGroup a5 = alt(5);
  try {
    a5.class_by_name("[5^1]");
    FAIL() << "split class accepted without a tag";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SplitClassAmbiguous);
  }
  EXPECT_NE(a5.class_by_name("[5^1]A"), a5.class_by_name("[5^1]B"));
  EXPECT_THROW(s5.class_by_name("[7^1]"), Error);
}

TEST(Group, NuAndRankMatchOracles) {
  struct Row {
    FiniteGroup g;
    std::size_t nu;
    unsigned rk;
  };
  const std::vector<Row> rows = {{alt(4), 2, 2},          {sym(4), 3, 2},         {alt(5), 3, 2},
                                 {cyclic_product({2, 2}), 3, 2}, {quaternion8(), 3, 2}, {cyclic_product({3, 3}), 4, 2},
                                 {sym(5), 3, 2},          {psl2(7), 3, 2},        {dihedral(5), 2, 2}};
  for (const auto& row : rows) {
    const auto elements = oracle::elements_of(row.g);
    EXPECT_EQ(oracle::nu(elements), row.nu) << row.g.label();
    EXPECT_EQ(oracle::rank(elements), row.rk) << row.g.label();
    EXPECT_EQ(maximal_cyclic_classes(row.g).nu, row.nu) << row.g.label();
    const RankResult rk = rank(row.g);
    EXPECT_EQ(rk.rank, row.rk) << row.g.label();
    EXPECT_TRUE(row.g.generates(rk.generators));
  }
}

TEST(Group, S6NuAndRank) {
  const FiniteGroup g = sym(6);
  EXPECT_EQ(oracle::nu(oracle::elements_of(g)), 5u);
  EXPECT_EQ(maximal_cyclic_classes(g).nu, 5u);
  EXPECT_EQ(rank(g).rank, 2u);
}

TEST(Group, RankCap) {
  try {
    rank(psl2(19), 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankSearchCapExceeded);
  }
}

TEST(Group, AbelianizationAndPowers) {
  EXPECT_EQ(abelianization(sym(4)).order(), 2u);
  EXPECT_EQ(abelianization(alt(4)).order(), 3u);
  EXPECT_EQ(abelianization(alt(5)).order(), 1u);
  const FiniteGroup g = sym(5);
  for (std::size_t i = 0; i < g.order(); ++i) {
    EXPECT_EQ(g.element(g.power(i, 3)), g.element(i).pow(3));
    EXPECT_EQ(g.multiply(i, g.inverse(i)), 0u);
  }
}

TEST(Group, PartitionNames) {
  EXPECT_EQ(parse_partition("[2^1,1^3]"), (std::vector<unsigned>{2, 1, 1, 1}));
  EXPECT_EQ(parse_partition("[3,3]"), (std::vector<unsigned>{3, 3}));
  EXPECT_EQ(partition_name({3, 2, 1}), "[3^1,2^1,1^1]");
  EXPECT_THROW(parse_partition("[a]"), Error);
}
