#pragma once

#include "ptheta/mpnum.hpp"

#include <span>
#include <vector>

namespace ptheta {

// Coefficients are stored in ascending order: c[0] + c[1] z + ...
struct HornerResult {
  MPComplex value;
  MPComplex derivative;
  Real error_bound;  // running rounding bound on value
};

HornerResult horner(std::span<const MPComplex> c, const MPComplex& z);

struct PolyRoots {
  std::vector<MPComplex> roots;
  int iterations = 0;
  bool converged = false;
};

// Simultaneous Aberth-Ehrlich iteration started from Newton-polygon radii.
PolyRoots aberth_roots(std::span<const MPComplex> c, int max_iterations = 600);

}  // namespace ptheta
