#include <gtest/gtest.h>

#include "conway/classify.hpp"
#include "conway/moves.hpp"

namespace conway {
namespace {

Signature Sig(std::size_t degree, GroupOrder order, bool transitive,
              std::optional<bool> primitive, bool contains_alt = false) {
  Signature s;
  s.degree = degree;
  s.order = order;
  s.transitive = transitive;
  s.primitive = primitive;
  s.contains_alt = contains_alt;
  return s;
}

ClaimStatus StatusOf(const ConsistencyReport& r, const std::string& id) {
  const Claim* c = r.Find(id);
  EXPECT_NE(c, nullptr) << id;
  return c ? c->status : ClaimStatus::kNotApplicable;
}

TEST(Classify, SignaturesOfBuiltins) {
  Signature bqs = ComputeSignature(HoleStabilizer(Builtin("bqs8"), 0));
  EXPECT_EQ(bqs.degree, 7u);
  EXPECT_EQ(bqs.order, 1);
  EXPECT_FALSE(bqs.transitive);
  EXPECT_FALSE(bqs.primitive.has_value());
  EXPECT_FALSE(bqs.generously_transitive);
  EXPECT_FALSE(bqs.contains_alt);
  EXPECT_TRUE(bqs.all_even);

  Signature nine = ComputeSignature(HoleStabilizer(Builtin("paper9"), 0));
  EXPECT_EQ(nine.degree, 8u);
  EXPECT_EQ(nine.order, 288);
  EXPECT_FALSE(nine.transitive);
  EXPECT_FALSE(nine.contains_alt);
  EXPECT_TRUE(nine.all_even);

  Signature m12 = ComputeSignature(HoleStabilizer(Builtin("pg3"), 0));
  EXPECT_EQ(m12.degree, 12u);
  EXPECT_EQ(m12.order, 95040);
  EXPECT_TRUE(m12.transitive);
  EXPECT_EQ(m12.primitive, true);
  EXPECT_TRUE(m12.generously_transitive);
  EXPECT_FALSE(m12.contains_alt);

  Signature sym9 = ComputeSignature(HoleStabilizer(Builtin("paper10"), 0));
  EXPECT_TRUE(sym9.contains_alt);
  EXPECT_FALSE(sym9.all_even);
}

TEST(Classify, Recognize) {
  EXPECT_EQ(Recognize(7, 1), "trivial");
  EXPECT_EQ(Recognize(8, 288), "Alt(4) wr C2");
  EXPECT_EQ(Recognize(12, 95040), "M12");
  EXPECT_EQ(Recognize(12, 7920), "M11");
  EXPECT_EQ(Recognize(9, 362880), "Sym(9)");
  EXPECT_EQ(Recognize(9, 181440), "Alt(9)");
  EXPECT_EQ(Recognize(15, 20160), "SL4(2) or Alt(8) (ambiguous by order)");
  EXPECT_EQ(Recognize(15, 720), "Sym(6)");
  EXPECT_EQ(Recognize(15, 2520), "Alt(7)");
  EXPECT_EQ(Recognize(15, 360), "Alt(6)");
  EXPECT_EQ(Recognize(11, Factorial(11) / 2), "Alt(11)");
  EXPECT_EQ(Recognize(10, 17), "unrecognized");
}

TEST(Classify, DegreeBoundsOnPlane) {
  auto sig = ComputeSignature(HoleStabilizer(Builtin("pg3"), 0));
  auto r = CheckDegreeBounds(13, 1, sig);
  ASSERT_EQ(r.claims.size(), 4u);
  for (const auto& c : r.claims) EXPECT_EQ(c.status, ClaimStatus::kHolds) << c.id;
}

TEST(Classify, DegreeBoundsOnBooleanSystem) {
  auto sig = ComputeSignature(HoleStabilizer(Builtin("bqs8"), 0));
  auto r = CheckDegreeBounds(8, 3, sig);
  EXPECT_EQ(StatusOf(r, "transitive_bound"), ClaimStatus::kNotApplicable);
  EXPECT_FALSE(r.HasViolation());
}

TEST(Classify, DegreeBoundViolationHasWitness) {
  auto r = CheckDegreeBounds(40, 3, Sig(39, 1, false, std::nullopt));
  EXPECT_EQ(StatusOf(r, "transitive_bound"), ClaimStatus::kViolated);
  EXPECT_NE(r.Find("transitive_bound")->witness.find("11.29"), std::string::npos)
      << r.Find("transitive_bound")->witness;
  EXPECT_TRUE(r.HasViolation());
}

TEST(Classify, Lambda3Table) {
  Signature trivial = Sig(7, 1, false, std::nullopt);
  EXPECT_EQ(StatusOf(CheckLambda3Classification(8, trivial), "classification_row"),
            ClaimStatus::kHolds);
  Signature wreath = Sig(8, 288, true, false);
  EXPECT_EQ(StatusOf(CheckLambda3Classification(9, wreath), "classification_row"),
            ClaimStatus::kHolds);
  Signature no_alt = Sig(11, 1000, true, true);
  auto twelve = CheckLambda3Classification(12, no_alt);
  EXPECT_EQ(StatusOf(twelve, "classification_row"), ClaimStatus::kViolated);
  EXPECT_TRUE(twelve.HasViolation());
  Signature m12 = Sig(12, 95040, true, true);
  EXPECT_EQ(StatusOf(CheckLambda3Classification(13, m12), "classification_row"),
            ClaimStatus::kHolds);
  Signature imprimitive = Sig(15, 5000, true, false);
  auto sixteen = CheckLambda3Classification(16, imprimitive);
  EXPECT_EQ(StatusOf(sixteen, "classification_row"), ClaimStatus::kHolds);
  EXPECT_NE(sixteen.Find("classification_row")->witness.find("permitted-unknown"),
            std::string::npos);
  EXPECT_THROW(CheckLambda3Classification(10, m12), Error);
}

TEST(Classify, Lambda3Thresholds) {
  Signature alt = Sig(59, Factorial(59), true, true, true);
  alt.all_even = false;
  auto r = CheckLambda3Classification(60, alt);
  EXPECT_EQ(StatusOf(r, "alternating_above_50"), ClaimStatus::kHolds);
  EXPECT_EQ(StatusOf(r, "even_generators"), ClaimStatus::kViolated);
  auto small = CheckLambda3Classification(8, Sig(7, 1, false, std::nullopt));
  EXPECT_EQ(StatusOf(small, "transitive_above_11"), ClaimStatus::kNotApplicable);
}

TEST(Classify, SupportCriterion) {
  EXPECT_EQ(SupportCriterion(Group(8), 3).which, CriterionCase::kNeither);
  auto inv = Permutation::FromCycles(12, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 11}});
  EXPECT_EQ(SupportCriterion(Group(12, {inv}), 3).which, CriterionCase::kNeither);

  auto nine = SupportCriterion(HoleStabilizer(Builtin("paper9"), 0), 3);
  EXPECT_NE(nine.which, CriterionCase::kNeither);
  ASSERT_FALSE(nine.witnesses.empty());
  EXPECT_LT(nine.witnesses.front().SupportSize(), 12u);

  auto a = Permutation::FromCycles(12, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 11}});
  auto b = Permutation::FromCycles(12, {{0, 1}, {2, 4}, {3, 5}, {6, 8}, {7, 9}, {10, 11}});
  auto pair = SupportCriterion(Group(12, {a, b}), 3);
  if (pair.which == CriterionCase::kSharedTranspositionPair) {
    ASSERT_EQ(pair.witnesses.size(), 2u);
    ASSERT_TRUE(pair.shared_transposition.has_value());
    auto [x, y] = *pair.shared_transposition;
    for (const auto& w : pair.witnesses) EXPECT_EQ(w[x], y);
  } else {
    EXPECT_EQ(pair.which, CriterionCase::kSmallSupportElement);
    EXPECT_LT(pair.witnesses.front().SupportSize(), 12u);
  }
  EXPECT_THROW(SupportCriterion(Group(12, {a}), 0), Error);
}

}  // namespace
}  // namespace conway
