#include "ptheta/theta.hpp"

#include "ptheta/errors.hpp"

#include <algorithm>
#include <array>

namespace ptheta {

namespace bmp = boost::multiprecision;

namespace {

constexpr long kMaxTerms = 2'000'000;

enum Component { kValue, kDz, kStar, kDq, kDqz, kComponents };

struct SeriesOut {
  std::array<MPComplex, kComponents> sum;
  std::array<Real, kComponents> radius;
  int terms = 0;
};

int common_digits(const MPComplex& q, const MPComplex& z) {
  return std::max({q.precision(), z.precision(), kMinDigits});
}

void check_q(const MPComplex& q) {
  if (q.is_zero()) throw DomainError("q = 0");
  if (norm(q) >= 1) throw DomainError("|q| >= 1");
}

// Sums the series and, when jet is set, its termwise derivatives.
// limit >= 0 truncates at degree limit with no tail; otherwise the geometric rule decides.
SeriesOut sum_series(const MPComplex& q, const MPComplex& z, const Real& tol, bool relative, bool jet,
                     int limit) {
  const int ncomp = jet ? kComponents : 1;
  SeriesOut out;
  std::array<Real, kComponents> mass, peak;
  for (int c = 0; c < kComponents; ++c) {
    out.sum[c] = MPComplex();
    mass[c] = 0;
    peak[c] = 0;
    out.radius[c] = 0;
  }
  const Real aq = abs(q), az = abs(z);
  const MPComplex one(Real(1), Real(0));
  MPComplex qj = one;   // q^j
  MPComplex A = one;    // q^{j(j+1)/2}
  MPComplex A1 = one;   // q^{j(j+1)/2 - 1}, j >= 1
  MPComplex A3 = one;   // q^{j(j+1)/2 - 3}, j >= 2
  MPComplex zj = one, zj1, zj2;
  Real aq_next = aq;  // |q|^{j+1}
  std::array<MPComplex, kComponents> term;
  const int min_terms = jet ? 3 : 1;
  long j = 0;
  for (;; ++j) {
    if (j > 0) {
      qj *= q;
      A *= qj;
      if (j >= 2) A1 *= qj;
      if (j >= 3) A3 *= qj;
      zj2 = zj1;
      zj1 = zj;
      zj *= z;
      aq_next *= aq;
    }
    if (limit >= 0 && j > limit) break;
    term[kValue] = A * zj;
    if (jet) {
      const Real jr(j);
      const Real ej(j * (j + 1) / 2);
      term[kDz] = j >= 1 ? (A * zj1) * jr : MPComplex();
      term[kStar] = j >= 2 ? (A3 * zj2) * Real(j * (j - 1) / 2) : MPComplex();
      term[kDq] = j >= 1 ? (A1 * zj) * ej : MPComplex();
      term[kDqz] = j >= 1 ? (A1 * zj1) * (ej * jr) : MPComplex();
    }
    if (limit < 0 && j >= min_terms) {
      // ratio of consecutive terms beyond j is at most |q|^{j+1}|z| F(j)
      Real ratio = aq_next * az;
      if (jet) {
        Real f = Real(j + 2) / Real(j);
        ratio *= f * f * f;
      }
      if (ratio <= Real("0.5")) {
        bool small = true;
        for (int c = 0; c < ncomp && small; ++c) {
          Real t = relative ? tol * peak[c] : tol;
          if (abs1(term[c]) > t / 2) small = false;
        }
        if (small) {
          for (int c = 0; c < ncomp; ++c) out.radius[c] = 2 * abs1(term[c]);
          break;
        }
      }
    }
    if (j >= kMaxTerms) throw PrecisionError("series did not reach tolerance within the term cap");
    for (int c = 0; c < ncomp; ++c) {
      Real m = abs1(term[c]);
      mass[c] += m;
      if (m > peak[c]) peak[c] = m;
      out.sum[c] += term[c];
    }
  }
  out.terms = static_cast<int>(j);
  const Real u = unit_roundoff(out.sum[kValue].re());
  for (int c = 0; c < ncomp; ++c) {
    Real rounding = 8 * Real(j + 3) * u * mass[c];
    if (limit < 0) {
      Real t = relative ? tol * peak[c] : tol;
      if (rounding > t / 2) throw PrecisionError("tolerance unreachable at the working precision");
    }
    out.radius[c] += rounding;
  }
  return out;
}

ThetaJet to_jet(const MPComplex& q, SeriesOut s) {
  ThetaJet jet;
  jet.value = std::move(s.sum[kValue]);
  jet.dz = std::move(s.sum[kDz]);
  jet.theta_star = std::move(s.sum[kStar]);
  jet.dq = std::move(s.sum[kDq]);
  jet.dqz = std::move(s.sum[kDqz]);
  const MPComplex two_q3 = powi(q, 3) * Real(2);
  jet.dzz = jet.theta_star * two_q3;
  jet.tail.value = s.radius[kValue];
  jet.tail.dz = s.radius[kDz];
  jet.tail.theta_star = s.radius[kStar];
  jet.tail.dq = s.radius[kDq];
  jet.tail.dqz = s.radius[kDqz];
  jet.tail.dzz = (s.radius[kStar] + abs1(jet.theta_star) * unit_roundoff(jet.dzz.re()) * 8) * abs1(two_q3);
  jet.terms_used = s.terms;
  return jet;
}

}  // namespace

ThetaValue eval_theta(const MPComplex& q, const MPComplex& z, const Real& tol) {
  check_q(q);
  if (tol <= 0) throw DomainError("tolerance must be positive");
  PrecisionScope scope(common_digits(q, z));
  SeriesOut s = sum_series(q, z, tol, false, false, -1);
  return {std::move(s.sum[kValue]), std::move(s.radius[kValue]), s.terms};
}

ThetaValue eval_theta_relative(const MPComplex& q, const MPComplex& z, const Real& rel) {
  check_q(q);
  if (rel <= 0) throw DomainError("tolerance must be positive");
  PrecisionScope scope(common_digits(q, z));
  SeriesOut s = sum_series(q, z, rel, true, false, -1);
  return {std::move(s.sum[kValue]), std::move(s.radius[kValue]), s.terms};
}

ThetaJet eval_jet(const MPComplex& q, const MPComplex& z, const Real& tol) {
  check_q(q);
  if (tol <= 0) throw DomainError("tolerance must be positive");
  PrecisionScope scope(common_digits(q, z));
  return to_jet(q, sum_series(q, z, tol, false, true, -1));
}

ThetaJet eval_jet_relative(const MPComplex& q, const MPComplex& z, const Real& rel) {
  check_q(q);
  if (rel <= 0) throw DomainError("tolerance must be positive");
  PrecisionScope scope(common_digits(q, z));
  return to_jet(q, sum_series(q, z, rel, true, true, -1));
}

MPComplex eval_truncation(const MPComplex& q, const MPComplex& z, int s) {
  if (s < 0) throw DomainError("negative truncation degree");
  PrecisionScope scope(common_digits(q, z));
  return std::move(sum_series(q, z, Real(1), false, false, s).sum[kValue]);
}

ThetaJet eval_truncation_jet(const MPComplex& q, const MPComplex& z, int s) {
  if (s < 0) throw DomainError("negative truncation degree");
  PrecisionScope scope(common_digits(q, z));
  return to_jet(q, sum_series(q, z, Real(1), false, true, s));
}

TripleProductParts eval_triple_product(const MPComplex& q, const MPComplex& z, const Real& tol) {
  check_q(q);
  if (z.is_zero()) throw DomainError("z = 0");
  if (tol <= 0) throw DomainError("tolerance must be positive");
  PrecisionScope scope(common_digits(q, z));
  const Real aq = abs(q), az = abs(z);
  const Real half("0.5");
  const MPComplex one(Real(1), Real(0));
  const MPComplex zinv = one / z;
  TripleProductParts out;
  out.Q = one;
  out.U = one;
  out.R = one;
  Real LQ = 0, LU = 0, LR = 0;
  long factors = 0;
  // Remaining log-deviation after the current factor: sum of 2 x_m over a geometric tail.
  auto remainder = [&](const Real& next) { return 2 * next / (1 - aq); };
  {
    MPComplex qm = one;
    Real next = aq;  // |q|^{m+1}
    for (long m = 1;; ++m, ++factors) {
      qm *= q;
      out.Q *= one - qm;
      next *= aq;
      if (next <= half && remainder(next) < tol) {
        LQ = remainder(next);
        break;
      }
      if (m > kMaxTerms) throw PrecisionError("product did not converge");
    }
  }
  {
    MPComplex qm = one;
    Real next = aq;
    for (long m = 1;; ++m, ++factors) {
      qm *= q;
      out.U *= one + z * qm;
      next *= aq;
      if (next * az <= half && remainder(next * az) < tol) {
        LU = remainder(next * az);
        break;
      }
      if (m > kMaxTerms) throw PrecisionError("product did not converge");
    }
  }
  {
    MPComplex qm1 = one;  // q^{m-1}
    Real next = Real(1);  // |q|^m
    for (long m = 1;; ++m, ++factors) {
      out.R *= one + qm1 * zinv;
      qm1 *= q;
      next *= aq;
      if (next / az <= half && remainder(next / az) < tol) {
        LR = remainder(next / az);
        break;
      }
      if (m > kMaxTerms) throw PrecisionError("product did not converge");
    }
  }
  out.theta_star_full = out.Q * out.U * out.R;
  const Real u = unit_roundoff(out.theta_star_full.re());
  const Real L = LQ + LU + LR;
  Real mag = abs(out.theta_star_full);
  out.factors_used = static_cast<int>(factors);
  // |exp(L) - 1| <= 2L for L <= 1
  out.radius = mag * (2 * L) + mag * u * 16 * Real(factors + 3);

  // G = sum_{i>=1} q^{i(i-1)/2} z^{-i}
  MPComplex g;
  MPComplex c = one;     // q^{i(i-1)/2}
  MPComplex qi = one;    // q^{i-1}
  MPComplex zi = one;    // z^{-i}
  Real aqi = Real(1);    // |q|^{i}
  Real mass(0);
  long i = 1;
  for (;; ++i) {
    if (i > 1) {
      qi *= q;
      c *= qi;
    }
    zi *= zinv;
    aqi *= aq;
    MPComplex t = c * zi;
    if (i > 1 && aqi / az <= half && abs1(t) <= tol / 2) {
      out.g_radius = 2 * abs1(t);
      break;
    }
    g += t;
    mass += abs1(t);
    if (i > kMaxTerms) throw PrecisionError("G series did not converge");
  }
  out.G = g;
  out.g_radius += 8 * Real(i + 2) * u * mass;
  return out;
}

}  // namespace ptheta
