#pragma once

#include "ptheta/mpnum.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace ptheta {

using BigInt = boost::multiprecision::cpp_int;

// Truncated power series in q with integer coefficients, ascending.
using IntSeries = std::vector<BigInt>;

// Product truncated to n coefficients.
IntSeries series_mul(const IntSeries& a, const IntSeries& b, std::size_t n);

// Zero expansion xi_k(q) = -q^-k + (-1)^k q^{k(k-1)/2} (1 + Phi_k(q)).
struct IntLaurent {
  int k = 0;
  IntSeries phi_coeffs;  // Phi_k, phi_coeffs[0] == 0
  int order = 0;         // number of coefficients of Phi_k
  IntSeries h_coeffs;    // q^k xi_k = sum_j h_{k,j} q^j, j < k(k+1)/2 + order
};

// Solves theta(q, xi_k(q)) = 0 one coefficient per order. Throws ConsistencyError if a
// coefficient fails to be an integer.
IntLaurent compute_phi(int k, int order);

// Coefficients of q^{k(k-1)/2} theta(q, xi_k(q)) below n, from the stored expansion.
IntSeries substitution_residual(const IntLaurent& series, std::size_t n);

// xi_k(q) from the truncated expansion.
MPComplex evaluate_xi(const IntLaurent& series, const MPComplex& q);

struct CauchyEntry {
  int j = 0;
  BigInt h;
  Real bound;   // (1 - 1/(alpha0 k))^{-j-1/2}
  Real margin;  // bound - |h|
};

struct CauchyReport {
  int k = 0;
  std::vector<CauchyEntry> entries;
  bool passed = true;
};

// Requires k >= 5.
CauchyReport check_cauchy_bounds(const IntLaurent& series);

struct StabilizationReport {
  int k_min = 0, k_max = 0, order = 0;
  // onset[j]: smallest k from which phi_coeffs[j] stays constant through k_max
  std::vector<int> onset;
  bool monotone = true;  // onset non-decreasing in j
};

StabilizationReport check_stabilization(int k_min, int k_max, int order);

}  // namespace ptheta
