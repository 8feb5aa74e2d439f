#pragma once

#include "ptheta/mpnum.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ptheta {

using HolomorphicFn = std::function<MPComplex(const MPComplex&)>;

// theta(q, .) evaluated to a relative accuracy far below what argument tracking needs.
HolomorphicFn theta_function(const MPComplex& q);
HolomorphicFn truncation_function(const MPComplex& q, int s);

struct ArgumentTrack {
  int winding = 0;
  long evaluations = 0;
  Real min_abs;  // smallest sampled |f|
};

struct SegmentTrack {
  double arg_change = 0.0;  // radians
  long evaluations = 0;
  Real min_abs;
};

// Continuous argument change of f along gamma(t), t in [0, 1], refined until every step keeps
// |f(b) - f(a)| < min(|f(a)|, |f(b)|). By default a sample below 10^-(digits-8) of the largest one
// counts as a zero on the path; pass relative_accuracy when f is accurate to relative precision
// at any magnitude, so only an exact zero (or exhausted refinement) stops the tracking.
SegmentTrack track_segment(const std::function<MPComplex(const Real&)>& gamma, const HolomorphicFn& f,
                           int samples, bool closed, bool relative_accuracy = false);

// Argument variation of f along a closed path gamma(t), t in [0, 1], in units of 2 pi.
// Throws ContourError when |f| falls below resolution or the sample cap is exhausted.
ArgumentTrack track_argument(const std::function<MPComplex(const Real&)>& gamma, const HolomorphicFn& f,
                             int samples = 256);

struct WindingResult {
  int count = 0;
  Real radius;  // radius actually used
  int perturbations = 0;
  long evaluations = 0;
};

// Zeros of f inside |z - center| = radius; radius is perturbed by |q|^{+-1/8}, |q|^{+-1/4}
// before a ContourError escapes.
WindingResult winding_count(const MPComplex& q, const Real& radius, const HolomorphicFn& f, int samples = 256,
                            const MPComplex& center = MPComplex());

// Radius of the circle C_k: |q|^{-k-1/2}.
Real circle_radius(const MPComplex& q, int k);

struct ZeroRecord {
  static constexpr int kInner = 0;
  int k = 0;  // annulus index, kInner for zeros inside C_0
  MPComplex value;
  Real residual;  // certified bound on |theta(q, value)|
  int newton_steps = 0;
  bool separated = false;
  int annulus_count = 1;           // winding-verified number of zeros in the annulus, -1 if not counted
  std::vector<MPComplex> cluster;  // all zeros of the annulus when annulus_count != 1
  bool multiple() const { return annulus_count != 1; }
};

enum class SeparationMethod { dominance, theorem1, winding };
std::string to_string(SeparationMethod m);

struct SeparationCertificate {
  MPComplex q;
  int k_start = 0;
  SeparationMethod method = SeparationMethod::winding;
  std::string route;  // "a", "b", "c" or "d"
  int n = 0;
  Real margin;
  int circles_from = 0;
  int circles_to = 0;
  bool valid() const { return margin > 0 && k_start >= 1; }
};

SeparationCertificate certify_strong_separation(const MPComplex& q, int n, int k_max = 12);
// Smallest n >= 5 with |q| <= 1 - 1/(alpha0 n).
int minimal_theorem_n(const MPComplex& q);

ZeroRecord find_xi(const MPComplex& q, int k, const Real& tol);
// Records for every annulus 1..k_max plus the inner cluster, sorted by k.
std::vector<ZeroRecord> find_zeros(const MPComplex& q, int k_max, const Real& tol);

struct HorizonResult {
  Real value;
  int maximizing_n = 0;
};
HorizonResult modulus_horizon();

struct EighthRootZero {
  MPComplex z0;
  Real modulus;
  std::vector<MPComplex> roots;  // all 7 roots
  Real separation;               // distance from z0 to the nearest other root
};
EighthRootZero eighth_root_zero();

// Newton on theta(q, .) from a seed; returns the refined zero and the number of steps.
struct NewtonResult {
  MPComplex z;
  int steps = 0;
  bool converged = false;
};
NewtonResult newton_zero(const MPComplex& q, MPComplex seed, int max_steps = 100);
// Simultaneous refinement of several zeros of theta(q, .) with mutual repulsion.
std::vector<MPComplex> refine_cluster(const MPComplex& q, std::vector<MPComplex> seeds, int max_steps = 200);

}  // namespace ptheta
