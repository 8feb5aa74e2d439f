#pragma once

// Checks shared by the property suites and the acceptance runner.

#include "ptheta/mpnum.hpp"

#include <random>
#include <string>
#include <vector>

namespace props {

// Random q with r0 <= |q| <= r1 and uniformly distributed argument.
ptheta::MPComplex random_q(std::mt19937_64& rng, double r0, double r1);

struct Census {
  std::vector<int> inside;  // inside[k]: zeros within C_k, k = 0..k_max
  int per_annulus(int k) const { return inside[k] - inside[k - 1]; }
};
Census annulus_census(const ptheta::MPComplex& q, int k_max);

// Zeros of theta(q, .) inside |z| = 1/(2|q|).
int zeros_in_small_disk(const ptheta::MPComplex& q);

struct IdentityCheck {
  double defect;     // observed discrepancy
  double allowance;  // combined certified radii
  bool holds() const { return defect <= allowance; }
};
// |Theta* - (theta + G)| against the triple-product radius plus both series tails.
IdentityCheck triple_product_identity(const ptheta::MPComplex& q, const ptheta::MPComplex& z);
// |2 q theta_q - z^2 theta_zz - 2 z theta_z| against the propagated jet radii.
IdentityCheck functional_equation(const ptheta::MPComplex& q, const ptheta::MPComplex& z);
// Largest relative deviation of the jet from central differences of the value (step 1e-10).
double jet_finite_difference_error(const ptheta::MPComplex& q, const ptheta::MPComplex& z);

}  // namespace props
