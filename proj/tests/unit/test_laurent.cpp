#include "oracles.hpp"

#include "ptheta/errors.hpp"
#include "ptheta/laurent.hpp"
#include "ptheta/zeros.hpp"

#include <gtest/gtest.h>

using namespace ptheta;
using oracle::OReal;

namespace {

// q^{k(k-1)/2} theta(q, q^-k w) below n, by expanding every power of w separately.
IntSeries naive_residual(const IntSeries& w, int k, std::size_t n) {
  IntSeries out(n);
  IntSeries wp{1};
  for (int j = 0; j < 4 * static_cast<int>(n) + 2 * k + 4; ++j) {
    const long e = static_cast<long>(j - k) * (j - k + 1) / 2;
    for (std::size_t i = 0; i < wp.size(); ++i)
      if (e + static_cast<long>(i) < static_cast<long>(n)) out[e + i] += wp[i];
    IntSeries next(std::min(n, wp.size() + w.size()));
    for (std::size_t a = 0; a < wp.size(); ++a)
      for (std::size_t b = 0; b < w.size() && a + b < next.size(); ++b) next[a + b] += wp[a] * w[b];
    wp = next;
  }
  return out;
}

}  // namespace

TEST(SeriesMul, MatchesSchoolbook) {
  const IntSeries a{1, -2, 3}, b{4, 5};
  const IntSeries c = series_mul(a, b, 10);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0], 4);
  EXPECT_EQ(c[1], -3);
  EXPECT_EQ(c[2], 2);
  EXPECT_EQ(c[3], 15);
  EXPECT_EQ(series_mul(a, b, 2).size(), 2u);
}

TEST(Laurent, ConstantTermVanishesAndResidualIsZero) {
  for (int k = 1; k <= 8; ++k) {
    const IntLaurent s = compute_phi(k, 15);
    ASSERT_EQ(s.phi_coeffs.size(), 15u);
    EXPECT_EQ(s.phi_coeffs[0], 0) << "k=" << k;
    EXPECT_EQ(s.h_coeffs.size(), static_cast<std::size_t>(k * (k + 1) / 2 + 15));
    for (const BigInt& c : substitution_residual(s, s.h_coeffs.size())) EXPECT_TRUE(c.is_zero());
    for (const BigInt& c : naive_residual(s.h_coeffs, k, s.h_coeffs.size())) EXPECT_TRUE(c.is_zero()) << "k=" << k;
  }
}

TEST(Laurent, LeadingShape) {
  for (int k = 1; k <= 6; ++k) {
    const IntLaurent s = compute_phi(k, 4);
    EXPECT_EQ(s.h_coeffs[0], -1);
    const std::size_t lead = static_cast<std::size_t>(k * (k + 1) / 2);
    for (std::size_t i = 1; i < lead; ++i) EXPECT_TRUE(s.h_coeffs[i].is_zero());
    EXPECT_EQ(s.h_coeffs[lead], k % 2 == 0 ? 1 : -1);
  }
}

// A long expansion evaluated at q = 0.05 against Newton on the series itself.
TEST(Laurent, HighOrderExpansionMatchesNewtonOracle) {
  const MPComplex q(Real("0.05"));
  for (int k = 1; k <= 6; ++k) {
    const IntLaurent s = compute_phi(k, 40);
    const MPComplex xi = evaluate_xi(s, q);
    const auto ref = oracle::newton_zero(oracle::to_o(q), oracle::to_o(xi));
    EXPECT_LT(abs(oracle::to_o(xi) - ref), OReal("1e-30") * abs(ref)) << "k=" << k;
  }
}

TEST(Laurent, AgreesWithLocatedZero) {
  const MPComplex q(Real("0.05"));
  for (int k = 3; k <= 8; ++k) {
    const IntLaurent s = compute_phi(k, 15);
    const ZeroRecord r = find_xi(q, k, Real(0));
    EXPECT_LT(abs(evaluate_xi(s, q) - r.value), 10 * boost::multiprecision::pow(Real("0.05"), 15)) << "k=" << k;
  }
}

TEST(Laurent, CauchyBoundsHoldFromFive) {
  for (int k = 5; k <= 8; ++k) EXPECT_TRUE(check_cauchy_bounds(compute_phi(k, 15)).passed) << "k=" << k;
  EXPECT_THROW(check_cauchy_bounds(compute_phi(4, 5)), DomainError);
}

TEST(Laurent, CauchyBoundValue) {
  const CauchyReport r = check_cauchy_bounds(compute_phi(5, 3));
  EXPECT_NEAR(oracle::to_double(r.entries[0].bound), std::pow(1 - 1 / (5 * 0.27566444771089604), -0.5), 1e-12);
}

TEST(Laurent, CoefficientsStabilize) {
  const StabilizationReport r = check_stabilization(1, 10, 10);
  EXPECT_TRUE(r.monotone);
  ASSERT_EQ(r.onset.size(), 10u);
  for (int j = 0; j < 10; ++j) EXPECT_LE(r.onset[j], 10);
}

TEST(Laurent, RejectsBadArguments) {
  EXPECT_THROW(compute_phi(0, 5), DomainError);
  EXPECT_THROW(compute_phi(2, 0), DomainError);
  EXPECT_THROW(evaluate_xi(compute_phi(1, 3), mp("1.5", "0")), DomainError);
}
