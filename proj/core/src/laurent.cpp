#include "ptheta/laurent.hpp"

#include "ptheta/errors.hpp"
#include "ptheta/theta.hpp"

#include <algorithm>

namespace ptheta {

namespace bmp = boost::multiprecision;

IntSeries series_mul(const IntSeries& a, const IntSeries& b, std::size_t n) {
  IntSeries out(std::min(n, a.size() + b.size() - 1));
  for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

namespace {

std::size_t triangular(long m) { return static_cast<std::size_t>(m * (m + 1) / 2); }

// F(q) = sum_{j>=0} q^{(j-k)(j-k+1)/2} w^j, which is q^{k(k-1)/2} theta(q, w / q^k).
// Only coefficients below n are formed; every exponent is a nonnegative integer.
IntSeries recentered_theta(const IntSeries& w, int k, std::size_t n) {
  IntSeries f(n);
  IntSeries power{1};
  for (long j = 0;; ++j) {
    const long m = j - k;
    const std::size_t e = triangular(m);
    if (e >= n && m > 0) break;
    if (e < n)
      for (std::size_t i = 0; i + e < n && i < power.size(); ++i) f[i + e] += power[i];
    power = series_mul(power, w, n);
  }
  return f;
}

}  // namespace

IntLaurent compute_phi(int k, int order) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (order < 1) throw DomainError("order must be at least 1");
  const std::size_t lead = triangular(k);
  const std::size_t n = lead + static_cast<std::size_t>(order);
  // q^k xi_k = w = -1 + eps; the coefficient of q^i in F is linear in eps_i with factor
  // d/dw (w^{k-1} + w^k) at w = -1, which is (-1)^{k-1}
  const BigInt unit = k % 2 == 1 ? BigInt(1) : BigInt(-1);
  IntSeries w(n);
  w[0] = -1;
  for (std::size_t i = 1; i < n; ++i) {
    IntSeries f = recentered_theta(w, k, i + 1);
    BigInt quot, rem;
    bmp::divide_qr(BigInt(-f[i]), unit, quot, rem);
    if (!rem.is_zero()) throw ConsistencyError("non-integer coefficient in the zero expansion");
    w[i] = quot;
  }
  for (std::size_t i = 1; i < lead; ++i)
    if (!w[i].is_zero()) throw ConsistencyError("zero expansion does not start at q^{k(k+1)/2}");

  IntLaurent out;
  out.k = k;
  out.order = order;
  out.h_coeffs = w;
  // eps = (-1)^k q^{k(k+1)/2} (1 + Phi)
  const BigInt sign = k % 2 == 0 ? BigInt(1) : BigInt(-1);
  out.phi_coeffs.resize(static_cast<std::size_t>(order));
  for (std::size_t i = 0; i < out.phi_coeffs.size(); ++i) out.phi_coeffs[i] = sign * w[lead + i];
  out.phi_coeffs[0] -= 1;
  if (!out.phi_coeffs[0].is_zero()) throw ConsistencyError("constant term of Phi_k is not zero");
  return out;
}

IntSeries substitution_residual(const IntLaurent& series, std::size_t n) {
  if (n > series.h_coeffs.size()) throw DomainError("residual requested beyond the computed order");
  return recentered_theta(series.h_coeffs, series.k, n);
}

MPComplex evaluate_xi(const IntLaurent& series, const MPComplex& q) {
  if (q.is_zero() || !(norm(q) < 1)) throw DomainError("need 0 < |q| < 1");
  MPComplex acc;
  for (auto it = series.h_coeffs.rbegin(); it != series.h_coeffs.rend(); ++it)
    acc = acc * q + MPComplex(Real(it->str()));
  return acc / powi(q, series.k);
}

CauchyReport check_cauchy_bounds(const IntLaurent& series) {
  if (series.k < 5) throw DomainError("the Cauchy bounds need k >= 5");
  PrecisionScope scope(30);
  CauchyReport rep;
  rep.k = series.k;
  const Real base = 1 / (1 - 1 / (alpha0() * series.k));
  for (std::size_t j = 0; j < series.h_coeffs.size(); ++j) {
    CauchyEntry e;
    e.j = static_cast<int>(j);
    e.h = series.h_coeffs[j];
    e.bound = bmp::pow(base, Real(j) + Real(0.5));
    e.margin = e.bound - bmp::abs(Real(e.h.str()));
    if (!(e.margin >= 0)) rep.passed = false;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

StabilizationReport check_stabilization(int k_min, int k_max, int order) {
  if (k_min < 1 || k_max < k_min) throw DomainError("need 1 <= k_min <= k_max");
  StabilizationReport rep;
  rep.k_min = k_min;
  rep.k_max = k_max;
  rep.order = order;
  std::vector<IntSeries> phis;
  for (int k = k_min; k <= k_max; ++k) phis.push_back(compute_phi(k, order).phi_coeffs);
  rep.onset.assign(static_cast<std::size_t>(order), k_max);
  for (std::size_t j = 0; j < rep.onset.size(); ++j) {
    int idx = static_cast<int>(phis.size()) - 1;
    while (idx > 0 && phis[idx - 1][j] == phis.back()[j]) --idx;
    rep.onset[j] = k_min + idx;
  }
  for (std::size_t j = 1; j < rep.onset.size(); ++j)
    if (rep.onset[j] < rep.onset[j - 1]) rep.monotone = false;
  return rep;
}

}  // namespace ptheta
