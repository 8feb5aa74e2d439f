#include "ptheta/errors.hpp"
#include "ptheta/theta.hpp"

#include <algorithm>

namespace ptheta {

namespace bmp = boost::multiprecision;

namespace {

Real eps_here() { return unit_roundoff(Real(1)); }

// Lower bound of prod_{m>=1} (1 - x_m) where x_{m+1} = x_m * ratio.
Real product_lower(Real x, const Real& ratio) {
  Real p(1);
  const Real eps = eps_here();
  for (int m = 0; m < 1'000'000; ++m) {
    p *= 1 - x;
    x *= ratio;
    Real rest = 2 * x / (1 - ratio);
    if (x <= Real("0.5") && rest < eps) return p * bmp::exp(-rest);
  }
  throw PrecisionError("product did not converge");
}

Real bisect(const auto& f, Real lo, Real hi) {
  // f(lo) > 0 > f(hi)
  const Real stop = eps_here() * 64;
  while (hi - lo > stop) {
    Real mid = (lo + hi) / 2;
    if (f(mid) > 0) lo = mid;
    else hi = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace

Real tau_of(const Real& x) { return 2 * (1 - dominance_margin(x, 0)); }

Real dominance_margin(const Real& x, int k) {
  if (!(x > 0 && x < 1)) throw DomainError("argument must lie in (0, 1)");
  const Real lx = bmp::log(x);
  const Real eps = eps_here();
  Real s(0);
  for (long nu = 1;; ++nu) {
    Real t = bmp::exp(Real(nu * nu) / 2 * lx);
    s += (nu <= k ? 2 : 1) * t;
    // following terms shrink at least geometrically with ratio x^{nu + 1/2}
    Real r = bmp::exp((Real(nu) + Real("0.5")) * lx);
    if (t * 2 / (1 - r) < eps * s || t == 0) break;
  }
  return 1 - s;
}

Real solve_c0() {
  // tau = 2 sum x^{nu^2/2} equals 1 where 1 - sum x^{nu^2/2} = 1/2
  auto f = [](const Real& x) { return Real("0.5") - (1 - dominance_margin(x, 0)); };
  return bisect(f, Real("1e-6"), Real("0.999"));
}

Real solve_dominance_threshold(int k) {
  if (k < 0) throw DomainError("k must be non-negative");
  auto f = [k](const Real& x) { return dominance_margin(x, k); };
  return bisect(f, Real("1e-6"), Real("0.999"));
}

BoundParts bound_parts(const Real& q_abs, int n, const Real& alpha, const Real& z_abs) {
  if (n < 1) throw DomainError("n must be positive");
  if (alpha <= 0) throw DomainError("alpha must be positive");
  const Real an = alpha * n;
  if (!(q_abs > 0) || q_abs > 1 - 1 / an) throw DomainError("|q| exceeds 1 - 1/(alpha n)");
  if (!(z_abs > 1)) throw DomainError("|z| must exceed 1");
  const Real pi = pi_at(working_digits());
  const Real pi2 = pi * pi;
  BoundParts b;
  b.Q_min = bmp::exp(pi2 / 6 * (1 - an));
  b.R_min = (1 - 1 / z_abs) * b.Q_min;
  const Real root = bmp::sqrt(an * (an - 1));
  b.P_min = bmp::exp(-pi2 / 6 * root);
  const Real lq = bmp::log(q_abs);
  b.U_min = bmp::exp(-Real(n) * n / 2 * lq - pi2 / 3 * root);

  Real g(0);
  const Real eps = eps_here();
  for (long j = 1;; ++j) {
    Real t = bmp::exp(Real(j * (j - 1)) / 2 * lq - j * bmp::log(z_abs));
    g += t;
    Real r = bmp::exp(j * lq) / z_abs;
    if (r < 1 && t * r / (1 - r) < eps * g) {
      g += t * r / (1 - r);
      break;
    }
    if (j > 1'000'000) throw PrecisionError("G bound did not converge");
  }
  b.G_max = g;

  b.Q_prod = product_lower(q_abs, q_abs);
  b.R_prod = product_lower(1 / z_abs, q_abs);
  const Real sq = bmp::sqrt(q_abs);
  b.P_prod = product_lower(sq, q_abs);
  Real finite(1);
  Real x = sq;
  for (int m = 1; m <= n; ++m, x *= q_abs) finite *= 1 - x;
  b.U_prod = bmp::exp(-Real(n) * n / 2 * lq) * finite * b.P_prod;
  b.theta_star_min = b.Q_prod * b.R_prod * b.U_prod;
  b.closed_form_min = b.Q_min * b.U_min * b.R_min;
  return b;
}

Real alpha0() {
  const Real pi = pi_at(working_digits());
  return bmp::sqrt(Real(3)) / (2 * pi);
}

Real separation_horizon(int n) {
  if (n < 2) throw DomainError("n must be at least 2");
  const Real a = alpha0();
  return bmp::pow(1 - 1 / (a * (n - 1)), -Real(n) - Real("0.5"));
}

Real xi_lower_bound(int n) {
  const Real a = alpha0();
  return bmp::pow(1 - 1 / (a * n), -Real(n) + Real("0.5"));
}

Real theta_star_closed_form(const Real& alpha, int n) {
  const Real pi = pi_at(working_digits());
  const Real pi2 = pi * pi;
  return bmp::exp(pi2 / 3 + (1 / (2 * alpha) - 2 * pi2 * alpha / 3) * n) / 2;
}

}  // namespace ptheta
