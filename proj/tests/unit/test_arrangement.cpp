#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "interdec/error.hpp"
#include "oracles.hpp"

namespace interdec {
namespace {

using namespace fixtures;

Arrangement fa22() { return factor({2, 2}).arrangement; }

std::vector<std::size_t> dims(const Decomposition& d) {
  std::vector<std::size_t> out;
  for (const auto& s : d.components) out.push_back(s.dim());
  return out;
}

TEST(NewArrangement, Valid) {
  EXPECT_NO_THROW(three_lines());
  EXPECT_NO_THROW(constant_chain());
}

TEST(NewArrangement, NotMonotone) {
  try {
    Arrangement(C2(), Q(), 2, {Q2(), L1()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotMonotone);
  }
  const std::vector<Subspace> spaces{Q2(), L1()};
  const CheckReport r = check_monotonicity(C2(), spaces);
  EXPECT_FALSE(r.verdict);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(r.witness->reverify());
}

TEST(NewArrangement, ShapeErrors) {
  EXPECT_THROW(Arrangement(C2(), Q(), 2, {Q2()}), Error);
  EXPECT_THROW(Arrangement(C2(), Q(), 3, {Q2(), Q2()}), Error);
  const Subspace g = Subspace::full(Field::modular(3), 2);
  EXPECT_THROW(Arrangement(C2(), Q(), 2, {g, g}), Error);
}

TEST(EvalLowerSet, Examples) {
  const Arrangement tl = three_lines();
  EXPECT_EQ(eval_lower_set(tl, tl.poset().subposet({"a1", "a2"})), Q2());
  EXPECT_TRUE(eval_lower_set(tl, Subposet{}).is_zero());
  const Arrangement cc = constant_chain();
  EXPECT_EQ(eval_lower_set(cc, cc.poset().subposet({"x"})), Q2());
}

TEST(ConditionC, ThreeLinesFailsAtA1) {
  const Arrangement tl = three_lines();
  const CheckReport r = check_condition_C(tl);
  EXPECT_EQ(r.property, Property::C);
  EXPECT_FALSE(r.verdict);
  ASSERT_TRUE(r.witness);
  ASSERT_TRUE(std::holds_alternative<ElementIndex>(r.witness->location));
  EXPECT_EQ(std::get<ElementIndex>(r.witness->location), tl.poset().index_of("a1"));
  EXPECT_EQ(r.witness->vector, vec({1, 0}));
  EXPECT_EQ(r.witness->member_of, L1());
  EXPECT_TRUE(r.witness->excluded_from.is_zero());
  EXPECT_TRUE(r.witness->reverify());
}

TEST(ConditionC, PassingExamples) {
  EXPECT_TRUE(check_condition_C(constant_chain()).verdict);
  const CheckReport r = check_condition_C(fa22());
  EXPECT_TRUE(r.verdict);
  EXPECT_FALSE(r.witness);
}

TEST(IntersectionBruteforce, ThreeLines) {
  const Arrangement tl = three_lines();
  const CheckReport r = check_intersection_bruteforce(tl);
  EXPECT_FALSE(r.verdict);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(r.witness->reverify());
  ASSERT_TRUE(std::holds_alternative<LowerSetPair>(r.witness->location));
  const auto& pair = std::get<LowerSetPair>(r.witness->location);
  // The two lower sets are disjoint and their values meet nontrivially.
  EXPECT_TRUE(set_intersection(pair.first, pair.second).empty());
  EXPECT_TRUE(r.witness->excluded_from.is_zero());
}

TEST(IntersectionBruteforce, FA22ScansAll36Pairs) {
  const CheckReport r = check_intersection_bruteforce(fa22());
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(r.work.pairs_checked, 36u);
}

TEST(IntersectionBruteforce, EmptyPosetIsVacuous) {
  const Arrangement empty(Poset(), Q(), 2, {});
  EXPECT_TRUE(check_intersection_bruteforce(empty).verdict);
  EXPECT_TRUE(check_condition_C(empty).verdict);
  EXPECT_TRUE(check_strong_intersection(empty).verdict);
}

TEST(IntersectionBruteforce, CapIsEnforced) {
  try {
    check_intersection_bruteforce(fa22(), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
}

TEST(StrongIntersection, Examples) {
  EXPECT_TRUE(check_strong_intersection(fa22()).verdict);
  const CheckReport tl = check_strong_intersection(three_lines());
  EXPECT_FALSE(tl.verdict);
  ASSERT_TRUE(tl.witness);
  EXPECT_TRUE(tl.witness->reverify());
  EXPECT_EQ(tl.property, Property::StrongIntersection);
  const Arrangement single(Poset::antichain({"a"}), Q(), 2, {L1()});
  EXPECT_TRUE(check_strong_intersection(single).verdict);
}

TEST(PreDecompose, Examples) {
  const Decomposition cc = pre_decompose(constant_chain());
  EXPECT_FALSE(cc.certified);
  EXPECT_EQ(cc.components[0], Q2());
  EXPECT_TRUE(cc.components[1].is_zero());
  EXPECT_TRUE(cc.components[2].is_zero());

  const Decomposition tl = pre_decompose(three_lines());
  EXPECT_EQ(tl.components[0], L1());
  EXPECT_EQ(tl.components[1], L2());
  EXPECT_EQ(tl.components[2], L3());

  EXPECT_EQ(dims(pre_decompose(fa22())), (std::vector<std::size_t>{1, 1, 1, 1}));
}

TEST(PreDecompose, SeededSectionsStayComplements) {
  const Arrangement f = fa22();
  const auto q = oracles::quotient_dims(f);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Decomposition d = pre_decompose(f, SectionRule::seeded(seed));
    for (std::size_t a = 0; a < f.poset().size(); ++a) {
      EXPECT_EQ(d.components[a].dim(), q[a]);
      EXPECT_TRUE(contains(f.space(a), d.components[a]));
      EXPECT_TRUE(intersect(d.components[a], f.eval(f.poset().strict_downset(a))).is_zero());
    }
  }
  EXPECT_EQ(pre_decompose(f, SectionRule::seeded(7)).components, pre_decompose(f, SectionRule::seeded(7)).components);
}

TEST(PreDecompose, SeededSectionsActuallyVary) {
  const Arrangement f = fa22();
  const Decomposition canonical = pre_decompose(f);
  std::size_t differ = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    differ += pre_decompose(f, SectionRule::seeded(seed)).components != canonical.components;
  EXPECT_GE(differ, 5u);
}

TEST(VerifyDecomposition, Examples) {
  const Arrangement cc = constant_chain();
  Decomposition d{{Q2(), Subspace::zero(Q(), 2), Subspace::zero(Q(), 2)}, false};
  const Verification v = verify_decomposition(cc, d);
  EXPECT_TRUE(v.report.verdict);
  EXPECT_TRUE(v.decomposition.certified);
  EXPECT_EQ(v.report.property, Property::Decomposition);

  const Arrangement tl = three_lines();
  const Verification bad = verify_decomposition(tl, Decomposition{{L1(), L2(), L3()}, false});
  EXPECT_FALSE(bad.report.verdict);
  EXPECT_FALSE(bad.decomposition.certified);
  ASSERT_TRUE(bad.report.witness);
  EXPECT_TRUE(bad.report.witness->reverify());

  const Arrangement f = fa22();
  EXPECT_TRUE(verify_decomposition(f, pre_decompose(f)).report.verdict);
}

TEST(VerifyDecomposition, ReconstructionFailureIsCaught) {
  // In direct sum but too small: the top of the chain is not recovered.
  const Arrangement cc = constant_chain();
  const Subspace z = Subspace::zero(Q(), 2);
  const Verification v = verify_decomposition(cc, Decomposition{{L1(), z, z}, false});
  EXPECT_FALSE(v.report.verdict);
  ASSERT_TRUE(v.report.witness);
  EXPECT_TRUE(v.report.witness->reverify());
}

TEST(VerifyDecomposition, ComponentOutsideItsSpace) {
  const Arrangement f(C2(), Q(), 2, {L1(), Q2()});
  const Verification v = verify_decomposition(f, Decomposition{{L2(), L1()}, false});
  EXPECT_FALSE(v.report.verdict);
}

TEST(Decompose, Examples) {
  const DecomposeResult tl = decompose(three_lines());
  EXPECT_FALSE(tl.decomposable());
  ASSERT_TRUE(tl.condition_c.witness);
  EXPECT_TRUE(tl.condition_c.witness->reverify());

  const DecomposeResult cc = decompose(constant_chain());
  ASSERT_TRUE(cc.decomposable());
  EXPECT_TRUE(cc.decomposition->certified);
  EXPECT_EQ(dims(*cc.decomposition), (std::vector<std::size_t>{2, 0, 0}));

  const DecomposeResult f = decompose(fa22());
  ASSERT_TRUE(f.decomposable());
  EXPECT_EQ(dims(*f.decomposition), (std::vector<std::size_t>{1, 1, 1, 1}));
}

TEST(Decompose, ModularField) {
  // Over GF(2) the lines (1,0), (0,1), (1,1) still fail (C).
  const Field g = Field::modular(2);
  const Arrangement tl(A3(), g, 2, {span(2, {vec({1, 0})}, g), span(2, {vec({0, 1})}, g), span(2, {vec({1, 1})}, g)});
  EXPECT_FALSE(decompose(tl).decomposable());
  EXPECT_TRUE(decompose(factor({2, 3}, g).arrangement).decomposable());
}

TEST(DecompositionOf, Examples) {
  const Arrangement f = fa22();
  const Decomposition d = *decompose(f).decomposition;
  for (const auto& c : decomposition_of(f, d, vec({0, 0, 0, 0}))) EXPECT_TRUE(is_zero_vector(c));

  const auto parts = decomposition_of(f, d, vec({1, 1, 1, 1}));
  const ElementIndex bottom = f.poset().index_of("{}");
  for (std::size_t a = 0; a < parts.size(); ++a) {
    if (a == bottom)
      EXPECT_EQ(parts[a], vec({1, 1, 1, 1}));
    else
      EXPECT_TRUE(is_zero_vector(parts[a]));
  }

  const Arrangement cc = constant_chain();
  const auto chain = decomposition_of(cc, *decompose(cc).decomposition, vec({1, 1}));
  EXPECT_EQ(chain[0], vec({1, 1}));
  EXPECT_TRUE(is_zero_vector(chain[1]));
  EXPECT_TRUE(is_zero_vector(chain[2]));
}

TEST(DecompositionOf, ComponentsSumBackAndLieInComponents) {
  const Arrangement f = factor({2, 3}).arrangement;
  const Decomposition d = *decompose(f).decomposition;
  const Vector v = vec({3, -1, 4, 1, -5, 9});
  const auto parts = decomposition_of(f, d, v);
  Vector total(6);
  for (std::size_t a = 0; a < parts.size(); ++a) {
    EXPECT_TRUE(d.components[a].contains(parts[a]));
    for (std::size_t i = 0; i < 6; ++i) total[i] += parts[a][i];
  }
  EXPECT_EQ(total, v);
}

TEST(DecompositionOf, Errors) {
  const Arrangement f(A2(), Q(), 2, {L1(), Subspace::zero(Q(), 2)});
  const Decomposition d = *decompose(f).decomposition;
  try {
    decomposition_of(f, d, vec({0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VectorOutsideArrangement);
  }
  Decomposition raw = pre_decompose(f);
  try {
    decomposition_of(f, raw, vec({1, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Uncertified);
  }
}

TEST(PropertyNames, Stable) {
  EXPECT_EQ(to_string(Property::C), "C");
  EXPECT_EQ(to_string(Property::IBruteforce), "I");
  EXPECT_EQ(to_string(Property::StrongIntersection), "sI");
}

}  // namespace
}  // namespace interdec
