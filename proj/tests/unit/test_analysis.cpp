#include <gtest/gtest.h>

#include "support.hpp"

using namespace unipotent_lab;
using test_support::fixture;

TEST(QrScan, FreePresentationIsTorsionFree) {
  auto rep = qr_graded_scan(fixture("free.pres"), 6, 2);
  EXPECT_TRUE(rep.clean());
  EXPECT_EQ(rep.verdict, "torsion-free up to 6");
}

TEST(QrScan, OneRelatorSamples) {
  for (const auto& name : {"commutator.pres", "commutator_cubic.pres"}) {
    auto rep = qr_graded_scan(fixture(name), 5, 2);
    EXPECT_TRUE(rep.clean()) << name;
    EXPECT_EQ(rep.verdict, "torsion-free up to 5");
  }
}

TEST(QrScan, AdversarialFixture) {
  auto rep = qr_graded_scan(fixture("adversarial_torsion.pres"), 5, 2);
  ASSERT_FALSE(rep.clean());
  EXPECT_EQ(*rep.obstruction_degree, 2u);
  EXPECT_EQ(rep.verdict, "torsion found at degree 2");
  const auto& d2 = rep.degrees[1];
  EXPECT_EQ(d2.degree, 2u);
  EXPECT_EQ(d2.torsion, (std::vector<Integer>{2}));
  EXPECT_TRUE(d2.p_torsion);
}

// A certificate found at cutoff c stays at every larger cutoff.
TEST(QrScan, PropertyMonotoneInCutoff) {
  auto pres = fixture("adversarial_torsion.pres");
  for (unsigned c = 2; c <= 6; ++c) {
    auto rep = qr_graded_scan(pres, c, 2);
    ASSERT_FALSE(rep.clean()) << c;
    EXPECT_EQ(*rep.obstruction_degree, 2u);
  }
  EXPECT_TRUE(qr_graded_scan(pres, 1, 2).clean());
}

TEST(PRegularity, Examples) {
  auto free = p_regularity_scan(fixture("free.pres"), 6, 3);
  EXPECT_TRUE(free.clean());
  EXPECT_EQ(free.verdict, "p-regular up to class 6");
  auto comm = p_regularity_scan(fixture("commutator.pres"), 5, 2);
  EXPECT_TRUE(comm.clean());
  EXPECT_EQ(comm.degrees[0].free_rank, 2u);
  for (std::size_t k = 1; k < comm.degrees.size(); ++k) EXPECT_EQ(comm.degrees[k].free_rank, 0u);
  auto pp = p_regularity_scan(fixture("p_power.pres"), 5, 2);
  ASSERT_FALSE(pp.clean());
  EXPECT_EQ(*pp.obstruction_degree, 1u);
  EXPECT_EQ(pp.degrees[0].torsion, (std::vector<Integer>{2}));
  EXPECT_EQ(pp.verdict, "p-torsion at degree 1");
  // 2-torsion is not 3-torsion.
  EXPECT_TRUE(p_regularity_scan(fixture("p_power.pres"), 5, 3).clean());
}

TEST(Cd2, CommutatorPasses) {
  auto pres = fixture("commutator.pres");
  auto rep = one_relator_cd2_evidence(pres, 5, 2);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.verdict, "cd=2 evidence up to class 5");
  EXPECT_EQ(rep.relator_weight, 2u);
}

TEST(Cd2, KilledGeneratorPassesDegenerately) {
  auto rep = one_relator_cd2_evidence(fixture("killed_generator.pres"), 4, 2);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.diagram.quotient_lie_dims[1], 1u);
}

TEST(Cd2, PowerRelatorObstructed) {
  auto rep = one_relator_cd2_evidence(fixture("p_power.pres"), 4, 2);
  EXPECT_FALSE(rep.passed());
  EXPECT_FALSE(rep.p_regular);
  EXPECT_EQ(rep.verdict, "obstruction at degree 1");
}

// A clean p-regularity scan means check (d) of the cd2 pipeline passes.
TEST(Cd2, PropertyRegularityFeedsCheckD) {
  for (const auto& name : {"commutator.pres", "commutator_cubic.pres", "p_power.pres"}) {
    auto pres = fixture(name);
    auto reg = p_regularity_scan(pres, 4, 2);
    auto cd = one_relator_cd2_evidence(pres, 4, 2);
    EXPECT_EQ(reg.clean(), cd.p_regular) << name;
  }
}

TEST(Cd2, NeedsExactlyOneRelator) {
  EXPECT_THROW(one_relator_cd2_evidence(fixture("two_relators.pres"), 3, 2), InputError);
  EXPECT_THROW(one_relator_cd2_evidence(fixture("free.pres"), 3, 2), InputError);
}

TEST(RunConfig, Validation) {
  RunConfig c;
  EXPECT_NO_THROW(c.validate());
  c.cutoff = 11;
  EXPECT_THROW(c.validate(), InputError);
  c.cutoff = 5;
  c.prime = 6;
  EXPECT_THROW(c.validate(), InputError);
  RunConfig d;
  auto pres = parse_presentation("generators x\nrelator x^2\n");
  EXPECT_THROW(d.resolve_prime(pres), InputError);
  d.prime = 3;
  EXPECT_EQ(d.resolve_prime(pres), 3u);
}

TEST(Budget, ScansRespectBudget) {
  EXPECT_THROW(qr_graded_scan(fixture("two_relators.pres"), 8, 2, 20), BudgetExceeded);
}
