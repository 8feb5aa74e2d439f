#include "properties.hpp"

#include "ptheta/theta.hpp"
#include "ptheta/zeros.hpp"

#include <gtest/gtest.h>

using namespace ptheta;

// Fewer samples than the acceptance run, on different seeds.

TEST(SeparationProperty, HalfDiskOneZeroPerAnnulusFromFour) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 4; ++i) {
    const MPComplex q = props::random_q(rng, 0.05, 0.5);
    const props::Census c = props::annulus_census(q, 12);
    EXPECT_EQ(c.inside[4], 4) << to_string(q, 12);
    for (int k = 4; k <= 12; ++k) EXPECT_EQ(c.per_annulus(k), 1) << to_string(q, 12) << " k=" << k;
  }
}

TEST(SeparationProperty, BelowC0EveryAnnulusHoldsOneZero) {
  const double c0 = solve_c0().convert_to<double>();
  std::mt19937_64 rng(103);
  for (int i = 0; i < 4; ++i) {
    const MPComplex q = props::random_q(rng, 0.01, c0);
    const props::Census c = props::annulus_census(q, 12);
    EXPECT_EQ(c.inside[0], 0);
    for (int k = 1; k <= 12; ++k) EXPECT_EQ(c.per_annulus(k), 1) << to_string(q, 12) << " k=" << k;
  }
}

TEST(SeparationProperty, SmallDiskIsZeroFree) {
  std::mt19937_64 rng(107);
  for (int i = 0; i < 10; ++i) {
    const MPComplex q = props::random_q(rng, 0.05, 0.9);
    EXPECT_EQ(props::zeros_in_small_disk(q), 0) << to_string(q, 12);
  }
}

TEST(SeparationProperty, CertificateAgreesWithCensus) {
  std::mt19937_64 rng(109);
  for (int i = 0; i < 3; ++i) {
    const MPComplex q = props::random_q(rng, 0.3, 0.5);
    const SeparationCertificate cert = certify_strong_separation(q, minimal_theorem_n(q), 12);
    ASSERT_TRUE(cert.valid());
    const props::Census c = props::annulus_census(q, 12);
    for (int k = cert.k_start + 1; k <= 12; ++k) EXPECT_EQ(c.per_annulus(k), 1);
  }
}
