#include "ptheta/errors.hpp"
#include "ptheta/spectral.hpp"
#include "ptheta/theta.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ptheta {

namespace bmp = boost::multiprecision;

std::string to_string(SpectralKind k) {
  switch (k) {
    case SpectralKind::real_positive:
      return "real_positive";
    case SpectralKind::real_negative:
      return "real_negative";
    case SpectralKind::complex_pair:
      return "complex_pair";
  }
  return "complex_pair";
}

void canonical_sort(std::vector<SpectralPoint>& points) {
  std::stable_sort(points.begin(), points.end(), [](const SpectralPoint& a, const SpectralPoint& b) {
    Real ma = abs(a.q), mb = abs(b.q);
    if (ma != mb) return ma < mb;
    return arg(a.q) < arg(b.q);
  });
}

namespace {

// log10 of the largest term |q|^{j(j+1)/2} |z|^j, in double.
double log10_peak_term(const MPComplex& q, const MPComplex& z) {
  const double lq = std::log10(static_cast<double>(abs(q)));
  const double lz = std::log10(std::max(static_cast<double>(abs(z)), 1e-300));
  double best = 0.0;
  for (int j = 1; j < 100000; ++j) {
    double t = j * (j + 1) / 2.0 * lq + j * lz;
    best = std::max(best, t);
    if (t < best - 50 && j * lq + lz < 0) break;
  }
  return best;
}

}  // namespace

SpectralPoint refine_double_zero(const MPComplex& q0, const MPComplex& z0, bool use_full_series, int s) {
  RefineOptions o;
  o.use_full_series = use_full_series;
  o.s = s;
  return refine_double_zero(q0, z0, o);
}

SpectralPoint refine_double_zero(const MPComplex& q0, const MPComplex& z0, const RefineOptions& options) {
  if (!options.use_full_series && options.s < 2) throw DomainError("truncation degree must be at least 2");
  if (!(norm(q0) < 1) || q0.is_zero()) throw DomainError("q must satisfy 0 < |q| < 1");
  const int out_digits = std::max(working_digits(), kMinDigits);
  // cancellation in the series costs about log10 of its largest term
  const int digits = out_digits + static_cast<int>(std::ceil(log10_peak_term(q0, z0))) + 10;
  PrecisionScope scope(digits);
  MPComplex q = with_digits(q0, digits), z = with_digits(z0, digits);
  const Real rel = bmp::pow(Real(10), -(digits - 8));
  auto jet = [&](const MPComplex& qq, const MPComplex& zz) {
    return options.use_full_series ? eval_jet_relative(qq, zz, rel) : eval_truncation_jet(qq, zz, options.s);
  };

  ThetaJet j = jet(q, z);
  if (!(bmp::sqrt(norm(j.value) + norm(j.dz)) < Real(0.1)))
    throw DomainError("seed outside the Newton basin: |(theta, theta_z)| >= 0.1");

  const Real stop = bmp::pow(Real(10), -(out_digits + 2));
  std::vector<double> steps;
  bool converged = false;
  int it = 0;
  for (; it < options.max_steps; ++it) {
    MPComplex det = j.dq * j.dzz - j.dz * j.dqz;
    if (abs(det) < Real(1e-30)) throw DegenerateError("singular Jacobian of (theta, theta_z)");
    MPComplex dq = (j.value * j.dzz - j.dz * j.dz) / det;
    MPComplex dz = (j.dq * j.dz - j.dqz * j.value) / det;
    q -= dq;
    z -= dz;
    if (!(norm(q) < 1)) throw ConvergenceError("Newton iterate left the unit disk");
    Real e = std::max(abs(dq), abs(dz) / (1 + abs(z)));
    steps.push_back(e > Real(1e-300) ? static_cast<double>(e) : 0.0);
    j = jet(q, z);
    if (e <= stop) {
      converged = true;
      ++it;
      break;
    }
  }
  if (!converged) throw ConvergenceError("double-zero Newton did not converge");
  // quadratic phase: once the step is below 1e-3 each step at least halves, until rounding level
  const double noise = std::pow(10.0, -(digits - 10));
  for (std::size_t k = 0; k + 1 < steps.size(); ++k)
    if (steps[k] < 1e-3 && steps[k + 1] > noise && steps[k + 1] > 0.5 * steps[k])
      throw ConvergenceError("Newton lost quadratic convergence");

  if (!(abs(j.dzz) > Real(1e-6))) throw DegenerateError("theta_zz vanishes: zero of order at least three");

  SpectralPoint p;
  const Real snap = bmp::pow(Real(10), -(out_digits - 5));
  const bool real = bmp::abs(q.im()) <= snap * abs(q) && bmp::abs(z.im()) <= snap * (1 + abs(z));
  if (real) {
    q = MPComplex(q.re(), Real(0));
    z = MPComplex(z.re(), Real(0));
    j = jet(q, z);
    p.kind = q.re() > 0 ? SpectralKind::real_positive : SpectralKind::real_negative;
  } else {
    p.kind = SpectralKind::complex_pair;
  }
  p.residual_theta = with_digits(abs(j.value) + j.tail.value, out_digits);
  p.residual_theta_z = with_digits(abs(j.dz) + j.tail.dz, out_digits);
  p.theta_zz_abs = with_digits(abs(j.dzz), out_digits);
  p.q = with_digits(q, out_digits);
  p.z_double = with_digits(z, out_digits);
  p.truncation_s = options.use_full_series ? j.terms_used : options.s;
  p.refined_with_full_series = options.use_full_series;
  p.newton_steps = it;
  return p;
}

std::vector<SpectralPoint> spectral_values(int s, const ScanRegion& region, int grid, bool refine_full) {
  std::vector<SpectralPoint> out;
  for (const ScanCandidate& c : resultant_scan(s, region, grid)) {
    SpectralPoint p = refine_double_zero(c.q, c.z, refine_full, s);
    bool dup = false;
    for (const SpectralPoint& o : out)
      if (abs(o.q - p.q) < Real(1e-8)) dup = true;
    if (!dup) out.push_back(std::move(p));
  }
  canonical_sort(out);
  return out;
}

}  // namespace ptheta
