#pragma once

#include "ptheta/interval.hpp"
#include "ptheta/mpnum.hpp"

#include <optional>

namespace ptheta {

// theta(q, z) = sum_{j>=0} q^{j(j+1)/2} z^j for |q| < 1.

struct ThetaValue {
  MPComplex value;
  Real tail;  // certified bound on truncation plus rounding
  int terms_used = 0;
};

struct ThetaJet {
  MPComplex value;
  MPComplex dz;
  MPComplex dzz;
  MPComplex dq;
  MPComplex dqz;
  MPComplex theta_star;  // dzz / (2 q^3)
  struct Radii {
    Real value, dz, dzz, dq, dqz, theta_star;
  } tail;
  int terms_used = 0;
};

ThetaValue eval_theta(const MPComplex& q, const MPComplex& z, const Real& tol);
// Tolerance relative to the largest term of the series.
ThetaValue eval_theta_relative(const MPComplex& q, const MPComplex& z, const Real& rel);
ThetaJet eval_jet(const MPComplex& q, const MPComplex& z, const Real& tol);
ThetaJet eval_jet_relative(const MPComplex& q, const MPComplex& z, const Real& rel);

// Degree-s truncation theta_(s) and its jet; radii carry rounding only.
MPComplex eval_truncation(const MPComplex& q, const MPComplex& z, int s);
ThetaJet eval_truncation_jet(const MPComplex& q, const MPComplex& z, int s);

// Certified enclosures of the jet over a box of (q, z); tol bounds the series tail.
struct ThetaBoxJet {
  ComplexBox value, dz, dzz, dq, dqz;
  int terms_used = 0;
};

ThetaBoxJet eval_jet_box(const ComplexBox& q, const ComplexBox& z, const Real& tol);

struct TripleProductParts {
  MPComplex Q;  // prod_{m>=1} (1 - q^m)
  MPComplex U;  // prod_{m>=1} (1 + z q^m)
  MPComplex R;  // prod_{m>=1} (1 + q^{m-1}/z)
  MPComplex G;  // sum_{i>=1} q^{i(i-1)/2} z^{-i}
  MPComplex theta_star_full;  // Q U R = theta + G
  Real radius;                // bound on |theta_star_full - exact|
  Real g_radius;
  int factors_used = 0;
};

TripleProductParts eval_triple_product(const MPComplex& q, const MPComplex& z, const Real& tol);

// tau(x) = 2 sum_{nu>=1} x^{nu^2/2}.
Real tau_of(const Real& x);
// 1 - (2 sum_{nu=1}^{k} x^{nu^2/2} + sum_{nu>k} x^{nu^2/2}): the first k summands of tau
// keep their factor 2. A large k reproduces 1 - tau(x).
Real dominance_margin(const Real& x, int k);
// Root of tau(x) = 1 on (0, 1).
Real solve_c0();
// Root of dominance_margin(x, k) = 0 on (0, 1).
Real solve_dominance_threshold(int k);

struct BoundParts {
  // closed-form minorations, valid for |q| <= 1 - 1/(alpha n)
  Real Q_min;  // e^{(pi^2/6)(1 - alpha n)}
  Real R_min;  // (1 - 1/|z|) e^{(pi^2/6)(1 - alpha n)}
  Real P_min;  // e^{-(pi^2/6)(alpha n (alpha n - 1))^{1/2}}
  Real U_min;  // |q|^{-n^2/2} e^{-(pi^2/3)(alpha n (alpha n - 1))^{1/2}}
  Real G_max;  // sum_{j>=1} |q|^{j(j-1)/2} |z|^{-j}
  // the same quantities with the products evaluated (certified lower bounds)
  Real Q_prod;  // prod (1 - |q|^m)
  Real R_prod;  // prod (1 - |q|^{m-1}/|z|)
  Real P_prod;  // prod (1 - |q|^{m-1/2})
  Real U_prod;  // |q|^{-n^2/2} prod_{m<=n} (1 - |q|^{m-1/2}) P
  Real theta_star_min;  // Q_prod R_prod U_prod
  Real closed_form_min;  // Q_min U_min R_min with R_min at |z| >= 2
};

BoundParts bound_parts(const Real& q_abs, int n, const Real& alpha, const Real& z_abs);

// sqrt(3) / (2 pi)
Real alpha0();
// (1 - 1/(alpha0 (n - 1)))^{-n-1/2}: modulus beyond which zeros are separated.
Real separation_horizon(int n);
// (1 - 1/(n alpha0))^{-n+1/2}
Real xi_lower_bound(int n);
// e^{pi^2/3 + (1/(2 alpha) - 2 pi^2 alpha / 3) n} / 2
Real theta_star_closed_form(const Real& alpha, int n);

}  // namespace ptheta
