#include <gtest/gtest.h>

#include <set>

#include "weiltate/errors.hpp"
#include "weiltate/galois_model.hpp"
#include "weiltate/perm_group.hpp"
#include "weiltate/permutation.hpp"

using namespace weiltate;

TEST(IndexSet, BasicsAndOrder) {
  auto s = IndexSet::from_one_based({1, 3, 4});
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(0));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.to_string(), "{1, 3, 4}");
  EXPECT_EQ(s.complement(5), IndexSet::from_one_based({2, 5}));
  EXPECT_EQ(IndexSet().to_string(), "{}");
  EXPECT_TRUE(lex_less(IndexSet::from_one_based({1, 2, 5}), IndexSet::from_one_based({1, 3})));
  EXPECT_TRUE(lex_less(IndexSet::from_one_based({1}), IndexSet::from_one_based({1, 2})));
  EXPECT_FALSE(lex_less(IndexSet::from_one_based({2}), IndexSet::from_one_based({1, 5})));
}

TEST(Permutation, CyclesRoundTrip) {
  auto p = Permutation::from_cycles(8, "(1 2 3 4)(5 6 7 8)");
  EXPECT_EQ(p.to_cycles(), "(1 2 3 4)(5 6 7 8)");
  EXPECT_EQ(p.order(), 4);
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_EQ(Permutation::from_cycles(3, "()"), Permutation::identity(3));
  EXPECT_EQ(Permutation::identity(3).to_cycles(), "()");
  EXPECT_THROW(Permutation::from_cycles(3, "(1 4)"), HypothesisError);
  EXPECT_THROW(Permutation::from_cycles(3, "(1 2)(2 3)"), HypothesisError);
  EXPECT_THROW(Permutation({0, 0}), HypothesisError);
}

TEST(Permutation, CompositionAppliesRightFactorFirst) {
  auto a = Permutation::from_cycles(3, "(1 2)");
  auto b = Permutation::from_cycles(3, "(2 3)");
  // (a*b)(2) = a(b(2)) = a(3) = 3 (1-based)
  EXPECT_EQ((a * b)(1), 2);
  EXPECT_EQ(a.apply(IndexSet::from_one_based({1, 3})), IndexSet::from_one_based({2, 3}));
}

TEST(PermGroup, Orders) {
  EXPECT_EQ(PermGroup::build(4, {Permutation::from_cycles(4, "(1 2 3 4)")}).order(), 4u);
  EXPECT_EQ(PermGroup::build(4, {Permutation::from_cycles(4, "(1 2)"), Permutation::from_cycles(4, "(1 2 3 4)")})
                .order(),
            24u);
  EXPECT_EQ(PermGroup::build(3, {}).order(), 1u);
}

TEST(PermGroup, CapAndBfsTree) {
  std::vector<Permutation> gens{Permutation::from_cycles(5, "(1 2)"), Permutation::from_cycles(5, "(1 2 3 4 5)")};
  EXPECT_THROW(PermGroup::build(5, gens, 100), CapExceeded);
  auto g = PermGroup::build(5, gens);
  ASSERT_EQ(g.order(), 120u);
  EXPECT_TRUE(g.element(0).is_identity());
  for (std::size_t i = 1; i < g.order(); ++i) {
    EXPECT_EQ(g.element(i), g.generators()[g.via(i)] * g.element(g.parent(i)));
    EXPECT_EQ(g.index_of(g.element(i)), i);
  }
  const std::size_t a = 17, b = 42;
  EXPECT_EQ(g.element(g.multiply(a, b)), g.element(a) * g.element(b));
}

TEST(Subgroup, StabilizerAndGeneration) {
  auto g = PermGroup::build(4, {Permutation::from_cycles(4, "(1 2)"), Permutation::from_cycles(4, "(1 2 3 4)")});
  auto h = Subgroup::stabilizer(g, 0);
  EXPECT_EQ(h.order(), 6u);
  auto c = Subgroup::generated_by(g, std::vector<Permutation>{Permutation::from_cycles(4, "(1 2 3 4)")});
  EXPECT_EQ(c.order(), 4u);
  EXPECT_FALSE(c.is_subset_of(h));
  EXPECT_TRUE(Subgroup::trivial(g).is_subset_of(h));
  EXPECT_THROW(Subgroup::from_permutations(g, {Permutation::identity(4), Permutation::from_cycles(4, "(1 2 3)")}),
               HypothesisError);
}

TEST(Index2Overgroups, Examples) {
  auto model = cm_product_group(4);
  const auto& g = model.group();
  auto over_h = index2_overgroups(g, model.stabilizer());
  ASSERT_EQ(over_h.size(), 1u);
  EXPECT_EQ(over_h[0].order(), 24u);
  EXPECT_FALSE(over_h[0].contains(model.tau_index()));
  EXPECT_EQ(index2_overgroups(g, Subgroup::trivial(g)).size(), 3u);

  auto two = PermGroup::build(2, {Permutation::from_cycles(2, "(1 2)")});
  auto r = index2_overgroups(two, Subgroup::trivial(two));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].order(), 1u);
}

TEST(Index2Overgroups, AgreeWithExhaustiveSubgroupSearch) {
  // Every index-2 subgroup is the kernel of a character to {+-1}, hence
  // contains all squares; check the count against direct enumeration of
  // subsets of size |G|/2 closed under multiplication, for mu_2 x S_3.
  auto model = cm_product_group(3);
  const auto& g = model.group();
  ASSERT_EQ(g.order(), 12u);
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
    if (std::popcount(mask) != 6 || !(mask & 1u)) continue;
    bool closed = true;
    for (std::size_t a = 0; a < 12 && closed; ++a) {
      if (!((mask >> a) & 1u)) continue;
      for (std::size_t b = 0; b < 12 && closed; ++b) {
        if ((mask >> b) & 1u) closed = (mask >> g.multiply(a, b)) & 1u;
      }
    }
    count += closed;
  }
  EXPECT_EQ(index2_overgroups(g, Subgroup::trivial(g)).size(), count);
}

TEST(CMGaloisModel, ProductGroupOrdersAndOrbits) {
  EXPECT_EQ(cm_product_group(2).group().order(), 4u);
  EXPECT_EQ(cm_product_group(3).group().order(), 12u);
  auto m4 = cm_product_group(4);
  EXPECT_EQ(m4.group().order(), 48u);
  auto orbit = orbit_of_subset(m4, IndexSet::from_one_based({1, 2, 3, 4}));
  ASSERT_EQ(orbit.size(), 2u);
  EXPECT_EQ(orbit[0], IndexSet::from_one_based({1, 2, 3, 4}));
  EXPECT_EQ(orbit[1], IndexSet::from_one_based({5, 6, 7, 8}));

  auto pairs = orbit_of_subset(m4, IndexSet::from_one_based({1, 5}));
  ASSERT_EQ(pairs.size(), 4u);
  for (const auto& p : pairs) EXPECT_EQ(m4.tau_of(p), p);
  auto empty = orbit_of_subset(m4, IndexSet());
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty[0].empty());
}

TEST(CMGaloisModel, OrbitMatchesElementwiseImages) {
  auto m = cm_product_group(4);
  auto subset = IndexSet::from_one_based({1, 2, 6});
  std::set<std::uint32_t> direct;
  for (const auto& e : m.group().elements()) direct.insert(e.apply(subset).bits());
  EXPECT_EQ(orbit_of_subset(m, subset).size(), direct.size());
}

TEST(CMGaloisModel, Blocks) {
  auto m = cm_product_group(4);
  auto whole = blocks_of_subgroup(m, Subgroup::whole(m.group()));
  ASSERT_EQ(whole.size(), 1u);
  EXPECT_EQ(whole.blocks[0].size(), 8);
  EXPECT_EQ(blocks_of_subgroup(m, Subgroup::trivial(m.group())).size(), 8u);

  auto d = m.with_decomposition({Permutation::from_cycles(8, "(1 6 3 8)(2 7 4 5)")});
  const auto& part = d.blocks();
  ASSERT_EQ(part.size(), 2u);
  EXPECT_EQ(part.blocks[0].size(), 4);
  EXPECT_EQ(d.tau_of(part.blocks[0]), part.blocks[1]);
}

TEST(CMGaloisModel, RejectsBadInput) {
  auto tau = Permutation::from_cycles(4, "(1 3)(2 4)");
  EXPECT_THROW(CMGaloisModel::create(4, {Permutation::from_cycles(4, "(1 2)(3 4)")}, tau), HypothesisError);
  EXPECT_THROW(CMGaloisModel::create(4, {tau}, tau), HypothesisError);  // not transitive
  EXPECT_THROW(CMGaloisModel::create(4, {Permutation::from_cycles(4, "(1 2 3 4)")},
                                     Permutation::from_cycles(4, "(1 2)(3 4)")),
               HypothesisError);
  auto ok = CMGaloisModel::create(4, {Permutation::from_cycles(4, "(1 2 3 4)")}, tau);
  EXPECT_EQ(ok.group().order(), 4u);
  EXPECT_THROW(ok.blocks(), HypothesisError);
  EXPECT_THROW(cm_product_group(5, 100), CapExceeded);
  // tau is central, so the orbits of any D are permuted by it
  auto m = cm_product_group(2);
  EXPECT_NO_THROW(m.with_decomposition({Permutation::from_cycles(4, "(1 2)(3 4)")}));
}
