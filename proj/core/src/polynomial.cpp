#include "ptheta/polynomial.hpp"

#include "ptheta/errors.hpp"

#include <algorithm>

namespace ptheta {

namespace bmp = boost::multiprecision;

HornerResult horner(std::span<const MPComplex> c, const MPComplex& z) {
  if (c.empty()) return {MPComplex(), MPComplex(), Real(0)};
  MPComplex p = c.back();
  MPComplex dp;
  Real az = abs(z);
  Real e = abs(p) / 2;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
    e = e * az + abs(p);
  }
  Real u = unit_roundoff(p.re());
  return {p, dp, (2 * e - abs(p)) * u * 4};
}

namespace {

std::vector<MPComplex> initial_guesses(std::span<const MPComplex> c) {
  const int n = static_cast<int>(c.size()) - 1;
  struct Pt {
    int j;
    Real y;
  };
  std::vector<Pt> pts;
  for (int j = 0; j <= n; ++j)
    if (!c[j].is_zero()) pts.push_back({j, bmp::log(abs(c[j]))});
  // upper convex hull of (j, log|c_j|)
  std::vector<Pt> hull;
  for (const Pt& p : pts) {
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      Real cross = (b.j - a.j) * (p.y - a.y) - (b.y - a.y) * (p.j - a.j);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  const Real two_pi = 2 * pi_at(digits_of(c[0].re()));
  const Real sigma("0.7");
  std::vector<MPComplex> z;
  z.reserve(n);
  for (std::size_t h = 1; h < hull.size(); ++h) {
    int m = hull[h].j - hull[h - 1].j;
    Real u = bmp::exp((hull[h - 1].y - hull[h].y) / m);
    for (int i = 0; i < m; ++i) {
      Real angle = two_pi * i / m + two_pi * h / n + sigma;
      z.push_back(polar(u, angle));
    }
  }
  return z;
}

}  // namespace

PolyRoots aberth_roots(std::span<const MPComplex> coeffs, int max_iterations) {
  std::size_t lo = 0, hi = coeffs.size();
  while (hi > 0 && coeffs[hi - 1].is_zero()) --hi;
  if (hi == 0) throw DomainError("zero polynomial");
  while (lo < hi && coeffs[lo].is_zero()) ++lo;
  PolyRoots out;
  for (std::size_t i = 0; i < lo; ++i) out.roots.emplace_back();
  std::span<const MPComplex> c = coeffs.subspan(lo, hi - lo);
  const std::size_t n = c.size() - 1;
  if (n == 0) {
    out.converged = true;
    return out;
  }
  std::vector<MPComplex> z = initial_guesses(c);
  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  int it = 0;
  for (; it < max_iterations && remaining > 0; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      HornerResult h = horner(c, z[i]);
      if (abs(h.value) <= h.error_bound) {
        done[i] = true;
        --remaining;
        continue;
      }
      MPComplex w = h.value / h.derivative;
      MPComplex s;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) s += MPComplex(Real(1), Real(0)) / (z[i] - z[j]);
      MPComplex step = w / (MPComplex(Real(1), Real(0)) - w * s);
      z[i] -= step;
      if (abs(step) <= abs(z[i]) * unit_roundoff(z[i].re()) * 4) {
        done[i] = true;
        --remaining;
      }
    }
  }
  out.iterations = it;
  out.converged = remaining == 0;
  for (auto& r : z) out.roots.push_back(std::move(r));
  return out;
}

}  // namespace ptheta
