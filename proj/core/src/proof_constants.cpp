#include "cert_report.hpp"

#include "ptheta/errors.hpp"
#include "ptheta/spectral.hpp"
#include "ptheta/theta.hpp"
#include "ptheta/zeros.hpp"

#include <algorithm>

namespace ptheta {

namespace bmp = boost::multiprecision;

namespace {

Rational decimal(const char* digits, int scale) {
  return Rational(bmp::cpp_int(digits), bmp::pow(bmp::cpp_int(10), scale));
}

}  // namespace

Real to_real(const Rational& x) {
  return Real(bmp::numerator(x).str()) / Real(bmp::denominator(x).str());
}

Interval enclose(const Rational& x) {
  const Real r = to_real(x);
  return Interval(next_below(r), next_above(r));
}

MPComplex ProofConstants::center() const { return MPComplex(to_real(rho), to_real(tau_rect)); }

ProofConstants ProofConstants::standard() {
  ProofConstants c;
  c.rho = decimal("4353184958", 10);
  c.tau_rect = decimal("1230440086", 10);
  c.epsilon = decimal("2", 10);
  c.U = ComplexBox(hull(enclose(c.rho - c.epsilon), enclose(c.rho + c.epsilon)),
                   hull(enclose(c.tau_rect - c.epsilon), enclose(c.tau_rect + c.epsilon)));
  const Rational x0 = decimal("-5965", 3), x1 = decimal("-5961", 3);
  const Rational y0 = decimal("6102", 3), y1 = decimal("6106", 3);
  c.V = ComplexBox(hull(enclose(x0), enclose(x1)), hull(enclose(y0), enclose(y1)));
  c.A = MPComplex(to_real(x0), to_real(y0));
  c.B = MPComplex(to_real(x1), to_real(y0));
  c.C = MPComplex(to_real(x1), to_real(y1));
  c.D = MPComplex(to_real(x0), to_real(y1));
  c.alpha0 = ptheta::alpha0();
  const Real e = to_real(c.epsilon);
  const MPComplex one_i(Real(1), Real(1));
  c.delta = abs(one_i * (2 * e) / (c.center() - one_i * e));
  return c;
}

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::passed: return "passed";
    case CertStatus::failed: return "failed";
    case CertStatus::inconclusive: return "inconclusive";
  }
  return "failed";
}

const CertCheck* CertReport::find(const std::string& name) const {
  for (const CertCheck& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace detail {

void finalize(CertReport& r, bool inconclusive) {
  bool first = true;
  bool ok = true;
  for (const CertCheck& c : r.checks) {
    if (!c.gating) continue;
    if (first || c.margin < r.worst_margin) r.worst_margin = c.margin;
    first = false;
    ok = ok && c.passed();
  }
  if (!ok)
    r.status = CertStatus::failed;
  else
    r.status = inconclusive ? CertStatus::inconclusive : CertStatus::passed;
}

CertCheck relative_check(std::string name, const Real& value, const char* reference, const Real& rel_tol) {
  const Real ref(reference);
  CertCheck c;
  c.name = std::move(name);
  c.value = value;
  c.reference = reference;
  c.margin = rel_tol - bmp::abs(value - ref) / bmp::abs(ref);
  return c;
}

CertCheck interval_check(std::string name, const Interval& value, const Real& lo, const Real& hi) {
  CertCheck c;
  c.name = std::move(name);
  c.value = value.mid();
  c.reference = "(" + to_decimal(lo) + ", " + to_decimal(hi) + ")";
  c.margin = std::min(value.lo() - lo, hi - value.hi());
  return c;
}

CertCheck below_check(std::string name, const Real& value, const Real& limit, std::string reference) {
  CertCheck c;
  c.name = std::move(name);
  c.value = value;
  c.reference = std::move(reference);
  c.margin = limit - value;
  return c;
}

}  // namespace detail

namespace {

// prod_{m>=1} (1 - a b^{m-1}) for 0 < a < 1, 0 < b < 1, to working precision
Real geometric_product(const Real& a, const Real& b) {
  const Real eps = bmp::pow(Real(10), -(working_digits() + 2));
  Real p(1), t = a;
  while (t > eps) {
    p *= 1 - t;
    t *= b;
  }
  return p;
}

SpectralPoint refine_seed(const char* q_re, const char* q_im, const char* z_re, const char* z_im, bool full,
                          int s) {
  return refine_double_zero(mp(q_re, q_im, working_digits()), mp(z_re, z_im, working_digits()), full, s);
}

}  // namespace

CertReport audit_theorem_constants() {
  PrecisionScope scope(std::max(working_digits(), kDefaultDigits));
  using detail::relative_check;
  const Real tol("1e-8");
  CertReport r;
  r.lemma_id = "constants";
  auto add = [&](CertCheck c) {
    r.checks.push_back(std::move(c));
    ++r.cells_checked;
  };
  const Real a0 = alpha0();
  const Real half(0.5);
  add(relative_check("alpha0", a0, "0.2756644477", tol));
  add(relative_check("c0", solve_c0(), "0.2078750206", tol));
  add(relative_check("dominance_threshold_k1", solve_dominance_threshold(1), "0.2247945929", tol));
  add(relative_check("xi_lower_bound_n5", bmp::pow(1 - 1 / (5 * a0), Real(-4.5)), "336.2792102", tol));
  add(relative_check("separation_horizon_max", modulus_horizon().value, "4.685636519e5", tol));

  // part (4): |q| <= 1/2, n >= 3
  const Real d0 = bmp::pow(Real(2), Real(3.5));
  const Real r0 = geometric_product(1 / d0, half);
  const Real p0 = geometric_product(bmp::sqrt(half), half);
  const Real q0 = geometric_product(half, half);
  Real u_partial(1);
  for (int m = 1; m <= 3; ++m) u_partial *= 1 - bmp::pow(half, Real(m) - half);
  const Real u0 = bmp::pow(Real(2), Real(4.5)) * u_partial * p0;
  Real g(0);
  for (int j = 1; j < 200; ++j) g += bmp::pow(d0, -j) * bmp::pow(half, Real(j) * (j - 1) / 2);
  add(relative_check("d0", d0, "11.31370850", tol));
  add(relative_check("r0", r0, "0.8333799934", tol));
  add(relative_check("p0", p0, "0.1298980722", tol));
  add(relative_check("q0", q0, "0.2887880952", tol));
  add(relative_check("u0_partial_product", u_partial, "0.1558689591", tol));
  add(relative_check("u0", u0, "0.4581390612", tol));
  add(relative_check("theta_star_lower_bound", r0 * q0 * u0, "0.1102604290", tol));
  add(relative_check("G_upper_bound", g, "0.09213257671", tol));
  add(detail::below_check("G_below_theta_star", g, r0 * q0 * u0, "< r0 q0 u0"));
  const Real pi = pi_at(working_digits());
  CertCheck e;
  e.name = "strong_separation_margin";
  e.value = bmp::exp(pi * pi / 3) / 2 - 1;
  e.reference = "e^{pi^2/3}/2 - 1 > 0";
  e.margin = e.value;
  add(e);

  // spectral values, refined from coarse seeds
  const SpectralPoint v = refine_seed("0.43532", "0.12304", "-5.9639", "6.1048", true, 0);
  const Real vabs = abs(v.q);
  add(relative_check("v_modulus", vabs, "0.4523737623", tol));
  add(relative_check("v_modulus_pow_minus_3.5", bmp::pow(vabs, Real(-3.5)), "16.06050040", tol));
  const EighthRootZero z0 = eighth_root_zero();
  add(relative_check("z0_re", z0.z0.re(), "0.337553312314574", tol));
  add(relative_check("z0_im", z0.z0.im(), "0.448909453205253", tol));
  add(relative_check("z0_modulus", z0.modulus, "0.5616599824", tol));
  const SpectralPoint w = refine_seed("0.51696", "0", "-11.713", "0", true, 0);
  add(relative_check("w", w.q.re(), "0.5169593598", tol));
  // this pair is a zero of the resultant of theta_(18), so it is refined on the truncation
  const SpectralPoint pair = refine_seed("0.53734", "0.18033", "-2.4683", "7.6612", false, 18);
  add(relative_check("complex_pair_re", pair.q.re(), "0.5373389195", tol));
  add(relative_check("complex_pair_im", bmp::abs(pair.q.im()), "0.1803273369", tol));
  add(relative_check("complex_pair_modulus", abs(pair.q), "0.5667901400", tol));
  detail::finalize(r);
  return r;
}

}  // namespace ptheta
