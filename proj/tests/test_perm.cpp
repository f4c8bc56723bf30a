#include <random>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace decgroup;
using namespace testsupport;

namespace {

Permutation P(const char* s, std::size_t n) { return Permutation::parse_cycles(s, n); }

}  // namespace

TEST(Permutation, ParseAndFormat) {
  EXPECT_EQ(P("(1 2)(3 4)", 4).to_cycles(), "(1 2)(3 4)");
  EXPECT_EQ(P("(1,2)", 3), P("(1 2)", 3));
  EXPECT_TRUE(P("()", 5).is_identity());
  EXPECT_EQ(P("()", 5).to_cycles(), "()");
  EXPECT_EQ(P("(3 1 2)", 3).to_cycles(), "(1 2 3)");
  EXPECT_THROW(P("(1 1)", 3), std::exception);
  EXPECT_THROW(P("(1 4)", 3), std::exception);
  EXPECT_THROW(P("(1 2", 3), std::exception);
}

TEST(Permutation, CompositionIsRightToLeft) {
  const auto a = P("(1 2)", 3), b = P("(2 3)", 3);
  // (a*b)(2) = a(b(2)) = a(3) = 3, so 2 -> 3.
  EXPECT_EQ((a * b)(1), 2u);
  EXPECT_EQ((a * b).to_cycles(), "(1 2 3)");
  std::mt19937 rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_permutation(6, rng);
    EXPECT_TRUE((s * s.inverse()).is_identity());
    EXPECT_EQ(P(s.to_cycles().c_str(), 6), s);
  }
}

TEST(PermutationList, ParsesCommaSeparatedCycles) {
  const auto gens = parse_permutation_list("(1 2),(1 2 3 4 5)", 5);
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[1].to_cycles(), "(1 2 3 4 5)");
  EXPECT_EQ(parse_permutation_list("(1 2)(3 4), (1 3)", 4).size(), 2u);
}

TEST(GroupClosure, Examples) {
  EXPECT_EQ(group_closure({}, 3).order(), 1u);
  EXPECT_EQ(group_closure({P("(1 2)", 3), P("(1 2 3)", 3)}, 3).order(), 6u);
  const auto d4 = group_closure({P("(1 3)", 4), P("(1 2 3 4)", 4)}, 4);
  EXPECT_EQ(d4.order(), 8u);
  EXPECT_EQ(describe(d4).tag, "D_4 (dihedral on 4 points)");
  EXPECT_THROW(group_closure({P("(1 2)", 3)}, 4), ArityMismatch);
}

TEST(GroupClosure, IdempotentAndLagrange) {
  std::mt19937 rng(52);
  const std::size_t factorial5 = 120;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Permutation> gens;
    for (int k = 0; k < 1 + trial % 2; ++k) gens.push_back(random_permutation(5, rng));
    const auto g = group_closure(gens, 5);
    EXPECT_EQ(factorial5 % g.order(), 0u);
    EXPECT_EQ(group_closure(g.elements(), 5), g);
    EXPECT_EQ(group_closure(g.generators(), 5), g);
    EXPECT_NO_THROW(g.audit());
    for (const auto& x : g.elements()) {
      EXPECT_TRUE(g.contains(x.inverse()));
      for (const auto& y : g.elements()) EXPECT_TRUE(g.contains(x * y));
    }
  }
}

TEST(PermGroup, FromElementsRejectsNonGroups) {
  EXPECT_THROW(PermGroup::from_elements(3, {Permutation::identity(3), P("(1 2 3)", 3)}), std::logic_error);
  EXPECT_THROW(PermGroup::from_elements(3, {P("(1 2)", 3)}), std::logic_error);
}

TEST(PermGroup, SymmetricCap) {
  EXPECT_EQ(PermGroup::symmetric(4).order(), 24u);
  EXPECT_THROW(PermGroup::symmetric(11), EnumerationCapExceeded);
  EXPECT_EQ(PermGroup::symmetric_on(5, {1, 3}, 10).order(), 2u);
}

TEST(DirectProduct, Examples) {
  const auto s12 = PermGroup::from_elements(4, {Permutation::identity(4), P("(1 2)", 4)});
  const auto prod = direct_product_on_blocks({{{0, 1, 2}, s12}, {{3}, PermGroup::trivial(4)}}, 4);
  EXPECT_EQ(prod, s12);
  EXPECT_EQ(direct_product_on_blocks({{{0}, PermGroup::trivial(2)}, {{1}, PermGroup::trivial(2)}}, 2).order(), 1u);
  const auto klein = direct_product_on_blocks(
      {{{0, 1}, PermGroup::symmetric_on(4, {0, 1})}, {{2, 3}, PermGroup::symmetric_on(4, {2, 3})}}, 4);
  EXPECT_EQ(klein.order(), 4u);
  EXPECT_TRUE(klein.contains(P("(1 2)(3 4)", 4)));
  EXPECT_THROW(direct_product_on_blocks(
                   {{{0, 1}, PermGroup::symmetric_on(3, {0, 1})}, {{1, 2}, PermGroup::symmetric_on(3, {1, 2})}}, 3),
               std::exception);
}

TEST(DirectProduct, OrderMultiplies) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g1 = group_closure({P("(1 2 3)", 6)}, 6);
    const auto g2 = group_closure({random_permutation(3, rng)}, 3);
    // Lift g2 onto points 4..6.
    std::vector<Permutation> lifted;
    for (const auto& e : g2.elements()) {
      std::vector<std::size_t> img{0, 1, 2, 3 + e(0), 3 + e(1), 3 + e(2)};
      lifted.push_back(Permutation::from_images(img));
    }
    const auto h = PermGroup::from_elements(6, lifted);
    EXPECT_EQ(direct_product_on_blocks({{{0, 1, 2}, g1}, {{3, 4, 5}, h}}, 6).order(), g1.order() * h.order());
  }
}

TEST(Describe, Tags) {
  EXPECT_EQ(describe(PermGroup::symmetric(3)).tag, "S_3");
  EXPECT_EQ(describe(PermGroup::trivial(3)).tag, "trivial");
  EXPECT_EQ(describe(PermGroup::symmetric_on(4, {1, 2})).tag, "S_2 on {2,3}");
  const auto d5 = group_closure({P("(1 2 3 4 5)", 5), P("(2 5)(3 4)", 5)}, 5);
  EXPECT_EQ(describe(d5).tag, "D_5 (dihedral on 5 points)");
  EXPECT_EQ(describe(group_closure({P("(1 2 3 4)", 4)}, 4)).tag, "");
  // Relabelled square.
  const auto d4 = group_closure({P("(1 3 2 4)", 4), P("(1 2)", 4)}, 4);
  EXPECT_EQ(describe(d4).tag, "D_4 (dihedral on 4 points)");
}

TEST(PermGroup, ConjugationAndSubgroups) {
  const auto g = group_closure({P("(1 2)", 4)}, 4);
  const auto tau = P("(2 3)", 4);
  EXPECT_EQ(g.conjugated(tau), group_closure({P("(1 3)", 4)}, 4));
  EXPECT_TRUE(g.is_subgroup_of(PermGroup::symmetric(4)));
  EXPECT_FALSE(PermGroup::symmetric(4).is_subgroup_of(g));
}
