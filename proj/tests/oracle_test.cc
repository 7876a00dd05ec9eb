#include "modrc/oracle.h"

#include <cstdlib>

#include <gtest/gtest.h>

#include "modrc/families.h"
#include "modrc/params.h"

namespace modrc {
namespace {

Int a_of(Int g, Int ri, Int di, Int rj, Int dj) { return ri * dj - rj * di - ri * rj * (g - 1); }

TEST(ThreeTerm, WorkedInstance) {
  const ThreeTermValues v = evaluate_three_term(2, {1, 2, 3}, {5, 1, 2});
  EXPECT_EQ(a_of(2, 1, 5, 2, 1), -11);
  EXPECT_EQ(a_of(2, 2, 1, 3, 2), -5);
  EXPECT_EQ(a_of(2, 1, 5, 3, 2), -16);
  EXPECT_EQ(v.plus_lhs, -38);
  EXPECT_EQ(v.plus_rhs, -38);
  EXPECT_EQ(v.minus_lhs, -28);
  EXPECT_EQ(v.minus_rhs, -38);
}

TEST(ThreeTerm, DegenerateInstance) {
  const ThreeTermValues v = evaluate_three_term(2, {1, 1, 1}, {0, 0, 0});
  EXPECT_EQ(v.plus_lhs, -2);
  EXPECT_EQ(v.plus_rhs, -2);
  EXPECT_EQ(v.minus_lhs, 0);
  EXPECT_EQ(v.minus_rhs, -2);
}

TEST(ThreeTerm, PlusFormHoldsMinusFormFails) {
  const IdentityReports reps = verify_three_term_identities({}, 5000, 0);
  EXPECT_EQ(reps.plus.trials, 5000);
  EXPECT_EQ(reps.plus.failures, 0);
  EXPECT_TRUE(reps.plus.pass);
  EXPECT_TRUE(reps.plus.as_expected());

  EXPECT_GT(reps.minus.failures, 0);
  EXPECT_FALSE(reps.minus.pass);
  EXPECT_TRUE(reps.minus.expect_failure);
  EXPECT_TRUE(reps.minus.as_expected());
  ASSERT_EQ(reps.minus.counterexamples.size(), kDefaultCounterexampleCap);
  for (const auto& t : reps.minus.counterexamples) {
    ASSERT_EQ(t.size(), 7u);
    const ThreeTermValues v = evaluate_three_term(t[0], {t[1], t[2], t[3]}, {t[4], t[5], t[6]});
    EXPECT_NE(v.minus_lhs, v.minus_rhs);
  }
  EXPECT_TRUE(std::is_sorted(reps.minus.counterexamples.begin(), reps.minus.counterexamples.end()));
}

TEST(Claim, Examples) {
  EXPECT_TRUE(claim_hypothesis_holds(2, {1, 1, 1}, {0, 1, 2}));
  EXPECT_EQ(claim_margin(2, {1, 1, 1}, {0, 1, 2}), 2);  // 3 * A13 - 1
  EXPECT_FALSE(claim_hypothesis_holds(2, {1, 1, 1}, {0, 0, 0}));
}

TEST(Claim, ExhaustiveRangeHasNoViolations) {
  const VerificationReport rep = verify_claim_inequality({});
  EXPECT_GT(rep.trials, 0);
  EXPECT_EQ(rep.failures, 0);
  EXPECT_TRUE(rep.pass);
}

TEST(Telescoping, Examples) {
  const std::vector<Int> ranks{1, 1, 1}, degrees{-1, 0, 2}, twists{1, 1};
  EXPECT_EQ(degree_partial_sum_form(ranks, degrees, twists), 9);
  EXPECT_EQ(degree_pairwise_form(ranks, degrees, twists), 9);
  // l = 2 reduces to a1 (r1 d - r d1).
  EXPECT_EQ(degree_partial_sum_form({1, 2}, {-2, 3}, {4}), 4 * (1 * 1 - 3 * -2));
  EXPECT_EQ(degree_pairwise_form({1, 2}, {-2, 3}, {4}), 4 * (1 * 1 - 3 * -2));
}

TEST(Telescoping, RandomChainsAgree) {
  const VerificationReport rep = verify_degree_telescoping(10000, 7, {});
  EXPECT_EQ(rep.trials, 10000);
  EXPECT_EQ(rep.failures, 0);
  EXPECT_TRUE(rep.pass);
}

TEST(DimensionLaws, Examples) {
  const ModuliParams p2 = derive_params(2, 2, 1);
  EXPECT_EQ(two_step_dimension(p2, 1, 0, 2), 7);
  EXPECT_EQ(expected_dimension(p2, two_step_degree(p2, 1, 0, 2)), 7);
  const ModuliParams p3 = derive_params(3, 2, 1);
  EXPECT_EQ(two_step_dimension(p3, 1, 0, 2), 11);
  EXPECT_EQ(expected_dimension(p3, two_step_degree(p3, 1, 0, 2)), 10);
}

TEST(DimensionLaws, GridHasNoViolations) {
  DimensionGrid grid;
  grid.k_max = 10;
  grid.chains.deg_bound = 3;
  const VerificationReport rep = verify_dimension_laws(grid);
  EXPECT_GT(rep.trials, 0);
  EXPECT_EQ(rep.failures, 0) << rep.notes;
}

TEST(ComponentCounts, GridHasNoViolations) {
  const VerificationReport rep = verify_component_counts({});
  EXPECT_EQ(rep.trials, 4 * 5 * 13 * 20);
  EXPECT_EQ(rep.failures, 0);
}

TEST(Oracle, RejectsBadArguments) {
  EXPECT_THROW(verify_three_term_identities({}, -1, 0), ParameterError);
  EXPECT_THROW(verify_degree_telescoping(-1, 0, {}), ParameterError);
}

TEST(Oracle, ReportsIndependentOfWorkerCount) {
  ::setenv("MODULI_RC_THREADS", "1", 1);
  const IdentityReports a = verify_three_term_identities({}, 3000, 11);
  const VerificationReport ta = verify_degree_telescoping(3000, 11, {});
  ::setenv("MODULI_RC_THREADS", "5", 1);
  const IdentityReports b = verify_three_term_identities({}, 3000, 11);
  const VerificationReport tb = verify_degree_telescoping(3000, 11, {});
  ::unsetenv("MODULI_RC_THREADS");
  EXPECT_EQ(a.plus, b.plus);
  EXPECT_EQ(a.minus, b.minus);
  EXPECT_EQ(ta, tb);

  const IdentityReports c = verify_three_term_identities({}, 3000, 12);
  EXPECT_NE(a.minus.counterexamples, c.minus.counterexamples);
}

}  // namespace
}  // namespace modrc
