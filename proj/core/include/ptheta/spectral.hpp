#pragma once

#include "ptheta/interval.hpp"
#include "ptheta/mpnum.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ptheta {

enum class SpectralKind { real_positive, real_negative, complex_pair };
std::string to_string(SpectralKind k);

struct SpectralPoint {
  MPComplex q;
  MPComplex z_double;
  SpectralKind kind = SpectralKind::complex_pair;
  Real residual_theta;    // certified |theta| at (q, z_double)
  Real residual_theta_z;  // certified |theta_z|
  Real theta_zz_abs;
  int truncation_s = 0;  // degree of the truncation used (full series: terms needed at the point)
  bool refined_with_full_series = false;
  int newton_steps = 0;
  bool validated = true;  // false for table entries beyond the reference range
};

// Sorts by |q|, then arg q.
void canonical_sort(std::vector<SpectralPoint>& points);

struct Annulus {
  Real r_in;  // 0 for a disk
  Real r_out;
};

// A box with zero imaginary width is scanned as a real segment, where the number of real zeros of
// theta_(s)(x, .) changes at each spectral value.
using ScanRegion = std::variant<ComplexBox, Annulus>;

struct ScanCandidate {
  MPComplex q;
  MPComplex z;       // approximate double zero of the truncation
  int winding = 0;   // zeros of the resultant in the final cell; each spectral value counts twice
                     // because z -> q^-(s+1)/z maps zeros of theta_(s) to zeros
  Real cell_radius;  // half-diagonal of the final cell
  bool polished = false;
};

// Normalized resultant Res(theta_(s), d theta_(s)/dz)(q) / q^M with M the order of vanishing at q = 0.
MPComplex truncation_resultant(const MPComplex& q, int s);
long resultant_order_at_zero(int s);

std::vector<ScanCandidate> resultant_scan(int s, const ScanRegion& region, int grid);

struct RefineOptions {
  bool use_full_series = true;
  int s = 0;  // truncation degree when use_full_series is false
  int max_steps = 60;
};

SpectralPoint refine_double_zero(const MPComplex& q0, const MPComplex& z0, bool use_full_series, int s = 0);
SpectralPoint refine_double_zero(const MPComplex& q0, const MPComplex& z0, const RefineOptions& options);

// Scan plus refinement of every candidate (full series or the truncation itself); points closer
// than 1e-8 in q are merged and the list is canonically sorted.
std::vector<SpectralPoint> spectral_values(int s, const ScanRegion& region, int grid, bool refine_full);

enum class RealSign { positive, negative };

struct RealTableOptions {
  double r_start = 0.2;
  double r_stop = 0.995;
  double step_scale = 0.05;  // step = step_scale (1 - r)^2, capped
  int base_digits = 40;
};

// Reference sizes of the published tables: beyond them entries are flagged unvalidated.
inline constexpr int kPositiveTableSize = 25;
inline constexpr int kNegativeTableSize = 8;

std::vector<SpectralPoint> real_spectrum_table(int count, RealSign sign, const RealTableOptions& options = {});

struct EtaSample {
  MPComplex q;
  MPComplex eta;
  Real theta_z_abs;
};

struct EtaPath {
  std::vector<EtaSample> samples;
  Real derivative_bound;  // certified bound of |eta_q| over the box the grid lives in
  Real max_sampled_derivative;
};

// Continues the critical point of theta(q, .) near z_seed across q_grid; values must stay in v_box.
EtaPath eta_path(const std::vector<MPComplex>& q_grid, const MPComplex& z_seed, const ComplexBox& u_box,
                 const ComplexBox& v_box);

struct HomotopyResult {
  MPComplex q_dagger;
  MPComplex z_dagger;
  Real bound;  // max |1/theta_q| * |theta(q_start, z_start)|
  Real max_inv_theta_q;
  int steps = 0;
};

// Follows dq/dtheta = 1/theta_q along W = {theta_z = 0} from theta(q_start, z_start) to 0.
// inv_theta_q_max, when given, is a certified bound of |1/theta_q| used for the a-priori bound.
HomotopyResult homotopy_to_spectral(const MPComplex& q_start, const MPComplex& z_start,
                                    const std::optional<Real>& inv_theta_q_max = std::nullopt);

}  // namespace ptheta
