#pragma once

// Reference computations for tests. They deliberately avoid the library's own arithmetic: every
// quantity is recomputed in cpp_bin_float (50 digits) from its defining formula.

#include "ptheta/mpnum.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <random>
#include <vector>

namespace oracle {

using OReal = boost::multiprecision::cpp_bin_float_50;
using OComplex = boost::multiprecision::cpp_complex_50;

inline OReal to_o(const ptheta::Real& x) { return OReal(ptheta::to_decimal(x)); }
inline OComplex to_o(const ptheta::MPComplex& z) { return OComplex(to_o(z.re()), to_o(z.im())); }
inline ptheta::MPComplex from_o(const OComplex& z) {
  return ptheta::mp(z.real().str(50, std::ios::scientific), z.imag().str(50, std::ios::scientific));
}
inline double to_double(const ptheta::Real& x) { return x.convert_to<double>(); }

inline OComplex ipow(OComplex base, long n) {
  if (n < 0) return OComplex(1) / ipow(base, -n);
  OComplex r(1);
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

struct Derivatives {
  OComplex value, dz, dzz, dq, dqz;
};

// Direct partial sums of theta and its derivatives, j < terms.
inline Derivatives theta_terms(const OComplex& q, const OComplex& z, int terms) {
  Derivatives d{};
  OComplex qpow(1);  // q^{j(j+1)/2}
  OComplex zpow(1);  // z^j
  for (int j = 0; j < terms; ++j) {
    if (j > 0) qpow *= ipow(q, j);
    const OComplex t = qpow * zpow;
    d.value += t;
    if (j >= 1) d.dz += OReal(j) * t / z;
    if (j >= 2) d.dzz += OReal(j) * OReal(j - 1) * t / (z * z);
    const int e = j * (j + 1) / 2;
    if (e >= 1) {
      d.dq += OReal(e) * t / q;
      if (j >= 1) d.dqz += OReal(e) * OReal(j) * t / (q * z);
    }
    zpow *= z;
  }
  return d;
}

inline OComplex theta(const OComplex& q, const OComplex& z, int terms = 200) { return theta_terms(q, z, terms).value; }

// Two-sided Jacobi sum over |j| <= J.
inline OComplex jacobi_sum(const OComplex& q, const OComplex& z, int J) {
  OComplex s;
  for (int j = -J; j <= J; ++j) {
    const long e = static_cast<long>(j) * (j + 1) / 2;
    s += ipow(q, e) * ipow(z, j);
  }
  return s;
}

// sum_{i>=1} q^{i(i-1)/2} z^{-i}
inline OComplex negative_tail(const OComplex& q, const OComplex& z, int terms = 200) {
  OComplex s;
  for (int i = 1; i <= terms; ++i) s += ipow(q, i * (i - 1) / 2) * ipow(z, -i);
  return s;
}

// Durand-Kerner (Weierstrass) iteration; coefficients ascending, leading coefficient nonzero.
inline std::vector<OComplex> durand_kerner(const std::vector<OComplex>& c, int max_iter = 2000) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<OComplex> monic(c.size());
  for (int i = 0; i <= n; ++i) monic[i] = c[i] / c[n];
  auto eval = [&](const OComplex& z) {
    OComplex acc = monic[n];
    for (int i = n - 1; i >= 0; --i) acc = acc * z + monic[i];
    return acc;
  };
  OReal radius(1);
  for (int i = 0; i < n; ++i) radius = std::max(radius, 1 + abs(monic[i]));
  std::vector<OComplex> z(n);
  const OComplex seed(OReal("0.4"), OReal("0.9"));
  OComplex p(1);
  for (int i = 0; i < n; ++i) {
    z[i] = p * radius / 2;
    p *= seed;
  }
  const OReal eps("1e-45");
  for (int it = 0; it < max_iter; ++it) {
    OReal change(0);
    for (int i = 0; i < n; ++i) {
      OComplex den(1);
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      const OComplex step = eval(z[i]) / den;
      z[i] -= step;
      change = std::max(change, abs(step) / std::max(OReal(1), abs(z[i])));
    }
    if (change < eps) break;
  }
  return z;
}

// Coefficients of the degree-s truncation in z.
inline std::vector<OComplex> truncation_coefficients(const OComplex& q, int s) {
  std::vector<OComplex> c;
  for (int j = 0; j <= s; ++j) c.push_back(ipow(q, j * (j + 1) / 2));
  return c;
}

// Newton on the plain partial sum.
inline OComplex newton_zero(const OComplex& q, OComplex z, int terms = 200) {
  for (int it = 0; it < 200; ++it) {
    const Derivatives d = theta_terms(q, z, terms);
    const OComplex step = d.value / d.dz;
    z -= step;
    if (abs(step) < abs(z) * OReal("1e-45")) break;
  }
  return z;
}

// Uniform point in the annulus r0 <= |x| <= r1.
inline ptheta::MPComplex random_in_annulus(std::mt19937_64& rng, double r0, double r1) {
  std::uniform_real_distribution<double> ur(r0, r1), ut(0.0, 6.283185307179586);
  const double r = ur(rng), t = ut(rng);
  return ptheta::MPComplex::from_double(r * std::cos(t), r * std::sin(t));
}

}  // namespace oracle
