#include "oracles.hpp"

#include "ptheta/certifier.hpp"
#include "ptheta/errors.hpp"
#include "ptheta/theta.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ptheta;
using oracle::OReal;

TEST(Domination, FlipsAtThreshold) {
  EXPECT_TRUE(circle_domination(Real("0.22"), 1).passed());
  EXPECT_FALSE(circle_domination(Real("0.23"), 1).passed());
  EXPECT_TRUE(circle_domination(Real("0.2"), 50).passed());
  EXPECT_FALSE(circle_domination(Real("0.21"), 50).passed());
}

TEST(ProofConstantsTest, Delta) {
  const ProofConstants c = ProofConstants::standard();
  EXPECT_NEAR(oracle::to_double(c.delta), 1.2504823939e-9, 1e-18);
  EXPECT_TRUE(c.U.contains(c.center()));
  EXPECT_TRUE(c.V.contains(c.A));
  EXPECT_TRUE(c.V.contains(c.C));
}

TEST(Separ, ShallowCapNeverPasses) {
  EXPECT_THROW(verify_lemma_separ(0), DomainError);
  for (int d = 1; d <= 4; ++d) EXPECT_FALSE(verify_lemma_separ(d).passed()) << "depth " << d;
  EXPECT_EQ(verify_lemma_separ(2).status, CertStatus::inconclusive);
}

TEST(Separ, PassesWithDeepCap) {
  const CertReport r = verify_lemma_separ(16);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.worst_margin, 0);
  EXPECT_LT(r.find("tail_bound")->value, Real("0.02"));
}

// theta* at random points of U x V must lie in the enclosure.
TEST(BoxesProperty, EnclosureContainsPointValues) {
  const ProofConstants c = ProofConstants::standard();
  const LemmaBoxes b = lemma_box_enclosures(2);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> t(0.0, 1.0);
  for (int i = 0; i < 25; ++i) {
    const MPComplex q = c.U.lower_left() + MPComplex(Real(t(rng)) * c.U.re().width(), Real(t(rng)) * c.U.im().width());
    const MPComplex z = c.V.lower_left() + MPComplex(Real(t(rng)) * c.V.re().width(), Real(t(rng)) * c.V.im().width());
    const auto d = oracle::theta_terms(oracle::to_o(q), oracle::to_o(z), 200);
    const MPComplex star = oracle::from_o(d.dzz / (2 * oracle::ipow(oracle::to_o(q), 3)));
    EXPECT_TRUE(b.theta_star.contains(star));
    EXPECT_TRUE(b.theta_qz.contains(oracle::from_o(d.dqz)));
  }
}

TEST(Boxes, MonomialRowSumsToThetaStar) {
  const ProofConstants c = ProofConstants::standard();
  const MPComplex q = c.center(), z = c.A;
  MPComplex sum(Real(1));
  for (const MPComplex& m : monomial_row(MonomialTable::theta_star, q, z)) sum += m;
  const auto d = oracle::theta_terms(oracle::to_o(q), oracle::to_o(z), 200);
  const auto star = d.dzz / (2 * oracle::ipow(oracle::to_o(q), 3));
  EXPECT_LT(abs(oracle::to_o(sum) - star), OReal("1e-4"));
}

TEST(Boxes, ComputedThetaStarSitsLeftOfTheImaginaryAxis) {
  const CertReport r = verify_lemma_boxes(3);
  const CertCheck* re = r.find("re_theta_star");
  ASSERT_NE(re, nullptr);
  EXPECT_LT(re->value, Real("-0.03"));
  EXPECT_GT(re->value, Real("-0.08"));
  EXPECT_TRUE(r.find("im_theta_star")->passed());
  EXPECT_TRUE(r.find("theta_star_modulus_min")->passed());
}

TEST(Homotopy, BoundBelowOneTenBillionth) {
  const CertReport r = verify_homotopy_bound(3);
  EXPECT_TRUE(r.passed());
  EXPECT_LT(r.find("q_dagger_bound")->value, Real("1e-10"));
  EXPECT_TRUE(r.find("q_dagger_in_U")->passed());
}

TEST(Homotopy, NeedsFortyDigits) {
  PrecisionScope s(30);
  EXPECT_THROW(verify_homotopy_bound(3), PrecisionError);
}

TEST(Constants, GBoundAgainstDirectSum) {
  const CertReport r = audit_theorem_constants();
  OReal g(0);
  const OReal d0 = pow(OReal(2), OReal("3.5"));
  for (int j = 1; j < 60; ++j) g += pow(d0, -j) * pow(OReal("0.5"), OReal(j * (j - 1) / 2));
  EXPECT_LT(abs(oracle::to_o(r.find("G_upper_bound")->value) - g), OReal("1e-35"));
  for (const CertCheck& c : r.checks)
    if (c.name != "G_upper_bound") EXPECT_TRUE(c.passed()) << c.name;
}
