#include "oracles.hpp"

#include "ptheta/errors.hpp"
#include "ptheta/theta.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ptheta;
using oracle::OReal;

TEST(Theta, ValueAtZeroIsOne) {
  const ThetaValue v = eval_theta(mp("0.7", "0.2"), MPComplex(), Real("1e-30"));
  EXPECT_EQ(v.value, MPComplex(Real(1)));
}

TEST(Theta, NearDoubleZeroIsSmall) {
  const ThetaValue v = eval_theta(mp("0.3092493386", "0"), mp("-7.5032559833", "0"), Real("1e-30"));
  EXPECT_LT(abs(v.value), Real("1e-8"));
}

TEST(Theta, RejectsParameterOutsideDisk) {
  EXPECT_THROW(eval_theta(mp("1", "0"), mp("1", "0"), Real("1e-20")), DomainError);
  EXPECT_THROW(eval_theta(mp("0.6", "0.9"), mp("1", "0"), Real("1e-20")), DomainError);
}

TEST(Theta, ToleranceBeyondPrecisionIsRejected) {
  EXPECT_THROW(eval_theta(mp("0.5", "0"), mp("3", "0"), Real("1e-60")), PrecisionError);
}

// |computed - oracle| must stay inside the reported tail bound.
TEST(ThetaProperty, TailBoundCoversBruteSum) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    const MPComplex q = oracle::random_in_annulus(rng, 0.05, 0.8);
    const MPComplex z = oracle::random_in_annulus(rng, 0.1, 10.0);
    const ThetaValue v = eval_theta(q, z, Real("1e-25"));
    const auto ref = oracle::theta(oracle::to_o(q), oracle::to_o(z), 400);
    EXPECT_LE(abs(oracle::to_o(v.value) - ref), oracle::to_o(v.tail) + OReal("1e-36") * abs(ref))
        << "q=" << to_string(q) << " z=" << to_string(z);
    EXPECT_LE(v.tail, Real("1e-25"));
  }
}

TEST(ThetaProperty, JetMatchesTermwiseDerivatives) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 40; ++i) {
    const MPComplex q = oracle::random_in_annulus(rng, 0.05, 0.85);
    const MPComplex z = oracle::random_in_annulus(rng, 0.1, 20.0);
    const ThetaJet j = eval_jet(q, z, Real("1e-25"));
    const auto d = oracle::theta_terms(oracle::to_o(q), oracle::to_o(z), 400);
    const OReal slack("1e-30");
    EXPECT_LE(abs(oracle::to_o(j.dz) - d.dz), oracle::to_o(j.tail.dz) + slack * (1 + abs(d.dz)));
    EXPECT_LE(abs(oracle::to_o(j.dzz) - d.dzz), oracle::to_o(j.tail.dzz) + slack * (1 + abs(d.dzz)));
    EXPECT_LE(abs(oracle::to_o(j.dq) - d.dq), oracle::to_o(j.tail.dq) + slack * (1 + abs(d.dq)));
    EXPECT_LE(abs(oracle::to_o(j.dqz) - d.dqz), oracle::to_o(j.tail.dqz) + slack * (1 + abs(d.dqz)));
    const auto star = d.dzz / (2 * oracle::ipow(oracle::to_o(q), 3));
    EXPECT_LE(abs(oracle::to_o(j.theta_star) - star), oracle::to_o(j.tail.theta_star) + slack * (1 + abs(star)));
  }
}

TEST(Theta, JetAtOrigin) {
  const MPComplex q = mp("0.4", "0.1");
  const ThetaJet j = eval_jet(q, MPComplex(), Real("1e-30"));
  EXPECT_LT(abs(j.dz - q), Real("1e-35"));
  EXPECT_LT(abs(j.dqz - MPComplex(Real(1))), Real("1e-35"));
  EXPECT_LT(abs(j.theta_star - MPComplex(Real(1))), Real("1e-35"));
}

TEST(Theta, TruncationIsPartialSum) {
  const MPComplex q = mp("0.45", "0.2"), z = mp("-3", "1.5");
  const auto ref = oracle::theta(oracle::to_o(q), oracle::to_o(z), 10);
  EXPECT_LT(abs(oracle::to_o(eval_truncation(q, z, 9)) - ref), OReal("1e-36") * (1 + abs(ref)));
}

TEST(ThetaProperty, BoxJetEnclosesPointJets) {
  const ComplexBox qb = ComplexBox::corners(mp("0.43", "0.12"), mp("0.44", "0.125"));
  const ComplexBox zb = ComplexBox::corners(mp("-5.97", "6.10"), mp("-5.96", "6.11"));
  const ThetaBoxJet b = eval_jet_box(qb, zb, Real("1e-20"));
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> t(0.0, 1.0);
  for (int i = 0; i < 30; ++i) {
    const MPComplex q = mp("0.43", "0.12") + MPComplex::from_double(0.01 * t(rng), 0.005 * t(rng));
    const MPComplex z = mp("-5.97", "6.10") + MPComplex::from_double(0.01 * t(rng), 0.01 * t(rng));
    const ThetaJet j = eval_jet(q, z, Real("1e-25"));
    EXPECT_TRUE(b.value.contains(j.value));
    EXPECT_TRUE(b.dz.contains(j.dz));
    EXPECT_TRUE(b.dzz.contains(j.dzz));
    EXPECT_TRUE(b.dq.contains(j.dq));
    EXPECT_TRUE(b.dqz.contains(j.dqz));
  }
}

TEST(TripleProduct, MatchesTwoSidedSum) {
  const MPComplex q = mp("0.5", "0.1"), z = mp("1.3", "-0.7");
  const TripleProductParts p = eval_triple_product(q, z, Real("1e-30"));
  const auto ref = oracle::jacobi_sum(oracle::to_o(q), oracle::to_o(z), 60);
  EXPECT_LE(abs(oracle::to_o(p.theta_star_full) - ref), oracle::to_o(p.radius) + OReal("1e-35"));
  const auto g = oracle::negative_tail(oracle::to_o(q), oracle::to_o(z), 60);
  EXPECT_LE(abs(oracle::to_o(p.G) - g), oracle::to_o(p.g_radius) + OReal("1e-35"));
}

TEST(TripleProduct, VanishesAtMinusPowers) {
  const MPComplex q = mp("0.6", "0.2");
  const TripleProductParts p = eval_triple_product(q, -powi(MPComplex(Real(1)) / q, 3), Real("1e-30"));
  EXPECT_LE(abs(p.theta_star_full), p.radius + Real("1e-30"));
}

TEST(Bounds, TauAgainstDirectSum) {
  const Real x("0.37");
  OReal s(0);
  for (int nu = 1; nu < 200; ++nu) s += 2 * pow(OReal("0.37"), OReal(nu * nu) / 2);
  EXPECT_LT(abs(oracle::to_o(tau_of(x)) - s), OReal("1e-36"));
}

TEST(Bounds, ThresholdsSolveTheirEquations) {
  const Real c0 = solve_c0();
  EXPECT_LT(boost::multiprecision::abs(tau_of(c0) - 1), Real("1e-35"));
  EXPECT_NEAR(oracle::to_double(c0), 0.2078750206, 1e-10);
  const Real t1 = solve_dominance_threshold(1);
  EXPECT_LT(boost::multiprecision::abs(dominance_margin(t1, 1)), Real("1e-35"));
  EXPECT_NEAR(oracle::to_double(t1), 0.2247945929, 1e-10);
}

TEST(Bounds, DominanceMarginDecreasesInX) {
  for (int k = 1; k <= 5; ++k) {
    Real prev(2);
    for (double x = 0.05; x < 0.5; x += 0.05) {
      const Real m = dominance_margin(Real(x), k);
      EXPECT_LT(m, prev);
      prev = m;
    }
  }
}

TEST(Bounds, Alpha0ClosedForm) {
  EXPECT_NEAR(oracle::to_double(alpha0()), std::sqrt(3.0) / (2 * 3.141592653589793), 1e-15);
}

TEST(Bounds, PartsAtHalf) {
  const BoundParts b = bound_parts(Real("0.5"), 3, Real(1), boost::multiprecision::pow(Real(2), Real("3.5")));
  EXPECT_NEAR(oracle::to_double(b.Q_prod), 0.2887880951, 1e-9);
  EXPECT_NEAR(oracle::to_double(b.theta_star_min), 0.1102604289, 1e-9);
  EXPECT_LT(b.G_max, b.theta_star_min);
}
