#include "ptheta/zeros.hpp"

#include "ptheta/errors.hpp"
#include "ptheta/polynomial.hpp"
#include "ptheta/theta.hpp"

#include <algorithm>
#include <cmath>

namespace ptheta {

namespace bmp = boost::multiprecision;

std::string to_string(SeparationMethod m) {
  switch (m) {
    case SeparationMethod::dominance: return "dominance";
    case SeparationMethod::theorem1: return "theorem1";
    case SeparationMethod::winding: return "winding";
  }
  return "unknown";
}

namespace {

Real rel_tol(int digits) { return bmp::pow(Real(10), -(digits - 12)); }

// Extra digits so that absolute residuals near C_k stay small: the largest term of theta on
// |z| = |q|^{-k} is about |q|^{-k(k-1)/2}.
int digits_for_annulus(const MPComplex& q, int k, int base) {
  double l = -std::log10(static_cast<double>(abs(q)));
  double extra = std::max(0.0, 0.5 * k * (k - 1) * l);
  return base + static_cast<int>(std::ceil(extra)) + 10;
}

bool in_annulus(const MPComplex& q, int k, const MPComplex& z) {
  Real a = abs(z);
  if (k == ZeroRecord::kInner) return a < circle_radius(q, 0);
  return circle_radius(q, k - 1) < a && a < circle_radius(q, k);
}

Real certified_residual(const MPComplex& q, const MPComplex& z) {
  ThetaValue v = eval_theta_relative(q, z, rel_tol(working_digits()));
  return abs(v.value) + v.tail;
}

MPComplex seed_for(const MPComplex& q, int k) {
  return -powi(MPComplex(Real(1), Real(0)) / q, k);
}

// Power sums of the zeros inside the annulus (or disk) by the trapezoidal rule, normalized by scale.
std::vector<MPComplex> power_sums(const MPComplex& q, const Real& r_in, const Real& r_out, const Real& scale,
                                  int m, int nodes) {
  std::vector<MPComplex> s(m + 1);
  const Real two_pi = 2 * pi_at(working_digits());
  const Real rel = rel_tol(working_digits());
  auto add_circle = [&](const Real& r, int sign) {
    for (int i = 0; i < nodes; ++i) {
      MPComplex z = polar(r, two_pi * i / nodes);
      ThetaJet j = eval_jet_relative(q, z, rel);
      MPComplex w = j.dz / j.value * z / Real(nodes);
      MPComplex u = z / scale;
      MPComplex up(Real(1), Real(0));
      for (int p = 0; p <= m; ++p) {
        s[p] += sign > 0 ? w * up : -(w * up);
        up *= u;
      }
    }
  };
  add_circle(r_out, +1);
  if (r_in > 0) add_circle(r_in, -1);
  return s;
}

// Zeros of theta inside the annulus r_in < |z| < r_out when exactly m of them are known to be there.
std::vector<MPComplex> locate_cluster(const MPComplex& q, const Real& r_in, const Real& r_out, int m) {
  if (m <= 0) return {};
  const Real scale = r_in > 0 ? bmp::sqrt(r_in * r_out) : r_out / 2;
  std::vector<MPComplex> sums;
  for (int nodes = 256; nodes <= 8192; nodes *= 2) {
    sums = power_sums(q, r_in, r_out, scale, m, nodes);
    if (bmp::abs(sums[0].re() - m) < Real("1e-6") && bmp::abs(sums[0].im()) < Real("1e-6")) break;
  }
  // Newton identities: e_p = (1/p) sum_{i=1}^{p} (-1)^{i-1} e_{p-i} s_i
  std::vector<MPComplex> e(m + 1);
  e[0] = MPComplex(Real(1), Real(0));
  for (int p = 1; p <= m; ++p) {
    MPComplex acc;
    for (int i = 1; i <= p; ++i) {
      MPComplex t = e[p - i] * sums[i];
      if (i % 2 == 1) acc += t;
      else acc -= t;
    }
    e[p] = acc / Real(p);
  }
  // monic polynomial prod (u - u_i) = sum_p (-1)^p e_p u^{m-p}, ascending order
  std::vector<MPComplex> c(m + 1);
  for (int p = 0; p <= m; ++p) c[m - p] = p % 2 == 0 ? e[p] : -e[p];
  PolyRoots pr = aberth_roots(c);
  std::vector<MPComplex> seeds;
  for (auto& u : pr.roots) seeds.push_back(u * scale);
  return refine_cluster(q, std::move(seeds));
}

}  // namespace

NewtonResult newton_zero(const MPComplex& q, MPComplex seed, int max_steps) {
  NewtonResult out;
  const Real rel = rel_tol(working_digits());
  const Real stop = bmp::pow(Real(10), -(working_digits() - 4));
  out.z = std::move(seed);
  for (int i = 0; i < max_steps; ++i) {
    ThetaJet j = eval_jet_relative(q, out.z, rel);
    if (j.dz.is_zero()) break;
    MPComplex step = j.value / j.dz;
    out.z -= step;
    out.steps = i + 1;
    if (abs(step) <= abs(out.z) * stop) {
      out.converged = true;
      break;
    }
  }
  return out;
}

std::vector<MPComplex> refine_cluster(const MPComplex& q, std::vector<MPComplex> z, int max_steps) {
  const std::size_t n = z.size();
  if (n == 0) return z;
  const Real rel = rel_tol(working_digits());
  const Real stop = bmp::pow(Real(10), -(working_digits() - 4));
  const MPComplex one(Real(1), Real(0));
  std::vector<bool> done(n, false);
  for (int it = 0; it < max_steps; ++it) {
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      ThetaJet j = eval_jet_relative(q, z[i], rel);
      if (j.value.is_zero()) {
        done[i] = true;
        continue;
      }
      MPComplex w = j.value / j.dz;
      MPComplex s;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i) s += one / (z[i] - z[k]);
      MPComplex step = w / (one - w * s);
      z[i] -= step;
      if (abs(step) <= abs(z[i]) * stop) done[i] = true;
      else all = false;
    }
    if (all) break;
  }
  return z;
}

SeparationCertificate certify_strong_separation(const MPComplex& q, int n, int k_max) {
  if (n < 1) throw DomainError("n must be positive");
  if (q.is_zero() || norm(q) >= 1) throw DomainError("need 0 < |q| < 1");
  PrecisionScope scope(std::max(q.precision(), kMinDigits));
  SeparationCertificate c;
  c.q = q;
  c.n = n;
  const Real aq = abs(q);
  const Real slack = 1 + 16 * unit_roundoff(aq);
  Real tau = tau_of(aq);
  if (tau < 1) {
    c.k_start = 1;
    c.method = SeparationMethod::dominance;
    c.route = "a";
    c.margin = 1 - tau;
    return c;
  }
  const Real a0 = alpha0();
  // k_start = 4 beats route b, whose k_start is n >= 5
  if (aq <= Real("0.5")) {
    BoundParts b = bound_parts(Real("0.5"), 3, Real(1), bmp::pow(Real(2), Real("3.5")));
    c.k_start = 4;
    c.method = SeparationMethod::theorem1;
    c.route = "c";
    c.n = 3;
    c.margin = b.theta_star_min - b.G_max;
    return c;
  }
  if (n >= 5 && aq <= (1 - 1 / (a0 * n)) * slack) {
    c.k_start = n;
    c.method = SeparationMethod::theorem1;
    c.route = "b";
    c.margin = bmp::exp(pi_at(working_digits()) * pi_at(working_digits()) / 3) / 2 - 1;
    return c;
  }
  // explicit census: zeros inside C_k for k = 0..k_max
  c.method = SeparationMethod::winding;
  c.route = "d";
  HolomorphicFn f = theta_function(q);
  std::vector<int> inside(k_max + 1);
  Real worst(-1);
  for (int k = 0; k <= k_max; ++k) {
    WindingResult w = winding_count(q, circle_radius(q, k), f);
    inside[k] = w.count;
  }
  int start = k_max + 1;
  for (int k = k_max; k >= 1; --k) {
    if (inside[k] - inside[k - 1] != 1) break;
    start = k;
  }
  c.k_start = start;
  c.circles_from = std::max(start - 1, 0);
  c.circles_to = k_max;
  c.margin = start <= k_max ? Real(1) : Real(0);
  return c;
}

int minimal_theorem_n(const MPComplex& q) {
  PrecisionScope scope(std::max(q.precision(), kMinDigits));
  const Real aq = abs(q);
  const Real a0 = alpha0();
  int n = static_cast<int>(std::ceil(static_cast<double>(1 / (a0 * (1 - aq)))));
  n = std::max(n, 5);
  while (aq > 1 - 1 / (a0 * n)) ++n;
  return n;
}

ZeroRecord find_xi(const MPComplex& q, int k, const Real& tol) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (q.is_zero() || norm(q) >= 1) throw DomainError("need 0 < |q| < 1");
  const int base = std::max(q.precision(), kMinDigits);
  PrecisionScope scope(digits_for_annulus(q, k, base));
  const MPComplex qq = with_digits(q, working_digits());
  SeparationCertificate cert = certify_strong_separation(qq, minimal_theorem_n(qq), std::max(k, 1));
  ZeroRecord rec;
  rec.k = k;
  if (cert.valid() && k >= cert.k_start) {
    NewtonResult nr = newton_zero(qq, seed_for(qq, k));
    if (nr.converged && in_annulus(qq, k, nr.z)) {
      rec.value = nr.z;
      rec.newton_steps = nr.steps;
      rec.separated = true;
      rec.annulus_count = 1;
      rec.residual = certified_residual(qq, rec.value);
      if (rec.residual > tol && tol > 0) throw ConvergenceError("residual above tolerance");
      return rec;
    }
  }
  // census of the annulus
  HolomorphicFn f = theta_function(qq);
  int outer = winding_count(qq, circle_radius(qq, k), f).count;
  int inner = winding_count(qq, circle_radius(qq, k - 1), f).count;
  rec.annulus_count = outer - inner;
  if (rec.annulus_count == 1) {
    NewtonResult nr = newton_zero(qq, seed_for(qq, k));
    if (!(nr.converged && in_annulus(qq, k, nr.z))) {
      std::vector<MPComplex> c = locate_cluster(qq, circle_radius(qq, k - 1), circle_radius(qq, k), 1);
      nr.z = c.front();
      nr.converged = true;
    }
    rec.value = nr.z;
    rec.newton_steps = nr.steps;
    rec.separated = in_annulus(qq, k, rec.value);
  } else {
    rec.separated = false;
    if (rec.annulus_count > 0) {
      rec.cluster = locate_cluster(qq, circle_radius(qq, k - 1), circle_radius(qq, k), rec.annulus_count);
      MPComplex mean;
      for (const auto& z : rec.cluster) mean += z;
      rec.value = mean / Real(rec.annulus_count);
    } else {
      NewtonResult nr = newton_zero(qq, seed_for(qq, k));
      rec.value = nr.z;
      rec.newton_steps = nr.steps;
    }
  }
  rec.residual = certified_residual(qq, rec.value);
  if (!rec.cluster.empty()) {
    Real worst(0);
    for (const auto& z : rec.cluster) worst = std::max(worst, certified_residual(qq, z));
    rec.residual = worst;
  }
  return rec;
}

std::vector<ZeroRecord> find_zeros(const MPComplex& q, int k_max, const Real& tol) {
  if (k_max < 1) throw DomainError("k_max must be at least 1");
  if (q.is_zero() || norm(q) >= 1) throw DomainError("need 0 < |q| < 1");
  const int base = std::max(q.precision(), kMinDigits);
  std::vector<ZeroRecord> out;
  int k_start = 1;
  {
    PrecisionScope scope(base);
    SeparationCertificate cert = certify_strong_separation(q, minimal_theorem_n(q), k_max);
    k_start = cert.valid() ? cert.k_start : k_max + 1;
  }
  if (k_start > 1) {
    PrecisionScope scope(digits_for_annulus(q, std::min(k_start, k_max), base));
    const MPComplex qq = with_digits(q, working_digits());
    HolomorphicFn f = theta_function(qq);
    int inner = winding_count(qq, circle_radius(qq, 0), f).count;
    if (inner > 0) {
      ZeroRecord rec;
      rec.k = ZeroRecord::kInner;
      rec.annulus_count = inner;
      rec.cluster = locate_cluster(qq, Real(0), circle_radius(qq, 0), inner);
      Real worst(0);
      for (const auto& z : rec.cluster) worst = std::max(worst, certified_residual(qq, z));
      rec.value = rec.cluster.front();
      rec.residual = worst;
      out.push_back(rec);
    }
  }
  for (int k = 1; k <= k_max; ++k) out.push_back(find_xi(q, k, tol));
  return out;
}

HorizonResult modulus_horizon() {
  HorizonResult h;
  h.value = 0;
  for (int n = 5; n <= 60; ++n) {
    Real v = separation_horizon(n);
    if (v > h.value) {
      h.value = v;
      h.maximizing_n = n;
    }
  }
  return h;
}

EighthRootZero eighth_root_zero() {
  const Real pi = pi_at(working_digits());
  const MPComplex omega = polar(Real(1), 3 * pi / 4);
  std::vector<MPComplex> c;
  for (int j = 0; j <= 7; ++j) c.push_back(powi(omega, j * (j + 1) / 2));
  PolyRoots pr = aberth_roots(c);
  if (!pr.converged) throw ConvergenceError("root iteration did not converge");
  EighthRootZero out;
  out.roots = pr.roots;
  std::size_t best = 0;
  for (std::size_t i = 1; i < out.roots.size(); ++i)
    if (abs(out.roots[i]) < abs(out.roots[best])) best = i;
  out.z0 = out.roots[best];
  out.modulus = abs(out.z0);
  out.separation = Real(-1);
  for (std::size_t i = 0; i < out.roots.size(); ++i) {
    if (i == best) continue;
    Real d = abs(out.roots[i] - out.z0);
    if (out.separation < 0 || d < out.separation) out.separation = d;
  }
  if (out.separation <= Real("1e-6")) throw ConsistencyError("minimum-modulus root is not simple");
  return out;
}

}  // namespace ptheta
