#include "ptheta/errors.hpp"
#include "ptheta/spectral.hpp"
#include "ptheta/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ptheta {

namespace bmp = boost::multiprecision;

namespace {

Real jet_rel() { return bmp::pow(Real(10), -(working_digits() - 6)); }

// Newton on theta_z(q, .) from z.
MPComplex critical_newton(const MPComplex& q, MPComplex z) {
  const Real stop = bmp::pow(Real(10), -(working_digits() - 4));
  for (int i = 0; i < 60; ++i) {
    ThetaJet j = eval_jet_relative(q, z, jet_rel());
    if (j.dzz.is_zero()) throw DegenerateError("theta_zz vanishes on the path");
    MPComplex dz = j.dz / j.dzz;
    z -= dz;
    if (abs(dz) <= stop * (1 + abs(z))) return z;
  }
  throw ConvergenceError("critical-point Newton did not converge");
}

// max |theta_qz| / min |theta_zz| over the box product, refined on a grid of sub-boxes of v_box.
Real eta_derivative_bound(const ComplexBox& u_box, const ComplexBox& v_box) {
  constexpr int kSplit = 4;
  const Real tol = bmp::pow(Real(10), -(working_digits() - 6));
  Real worst(0);
  const Real x0 = v_box.re().lo(), y0 = v_box.im().lo();
  const Real dx = v_box.re().width() / kSplit, dy = v_box.im().width() / kSplit;
  for (int a = 0; a < kSplit; ++a)
    for (int b = 0; b < kSplit; ++b) {
      ComplexBox cell(Interval(x0 + dx * a, x0 + dx * (a + 1)), Interval(y0 + dy * b, y0 + dy * (b + 1)));
      ThetaBoxJet j = eval_jet_box(u_box, cell, tol);
      const Real mig = j.dzz.modulus().lo();
      if (!(mig > 0)) return Real(std::numeric_limits<double>::infinity());
      worst = std::max(worst, Interval(j.dqz.modulus().hi()).hi() / mig);
    }
  return next_above(worst);
}

}  // namespace

EtaPath eta_path(const std::vector<MPComplex>& q_grid, const MPComplex& z_seed, const ComplexBox& u_box,
                 const ComplexBox& v_box) {
  if (q_grid.empty()) throw DomainError("empty q grid");
  for (const MPComplex& q : q_grid)
    if (!u_box.contains(q)) throw DomainError("q grid leaves the parameter box");
  EtaPath out;
  const Real limit = bmp::pow(Real(10), -20);
  MPComplex z = z_seed;
  for (std::size_t i = 0; i < q_grid.size(); ++i) {
    const MPComplex& q = q_grid[i];
    if (i > 0) {
      // predictor: eta_q = -theta_qz / theta_zz at the previous point
      ThetaJet jp = eval_jet_relative(q_grid[i - 1], z, jet_rel());
      z -= jp.dqz / jp.dzz * (q - q_grid[i - 1]);
    }
    z = critical_newton(q, z);
    if (!v_box.contains(z)) throw PathError("critical point left the target box at q = " + to_string(q, 12));
    ThetaJet j = eval_jet_relative(q, z, jet_rel());
    const Real tz = abs(j.dz) + j.tail.dz;
    if (!(tz < limit)) throw PrecisionError("|theta_z| on the path exceeds 1e-20; raise the precision");
    out.max_sampled_derivative = std::max(out.max_sampled_derivative, abs(j.dqz / j.dzz));
    out.samples.push_back(EtaSample{q, z, tz});
  }
  out.derivative_bound = std::max(eta_derivative_bound(u_box, v_box), out.max_sampled_derivative);
  return out;
}

HomotopyResult homotopy_to_spectral(const MPComplex& q_start, const MPComplex& z_start,
                                    const std::optional<Real>& inv_theta_q_max) {
  if (!(norm(q_start) < 1)) throw DomainError("q must lie in the unit disk");
  HomotopyResult out;
  // project the start onto W = {theta_z = 0}
  MPComplex z = critical_newton(q_start, z_start);
  const MPComplex theta0 = eval_theta_relative(q_start, z, jet_rel()).value;
  MPComplex q = q_start;
  const Real flow_floor(1e-6);
  Real max_inv(0);
  auto field = [&](const MPComplex& qq, const MPComplex& zz, MPComplex& dq, MPComplex& dz) {
    ThetaJet j = eval_jet_relative(qq, zz, jet_rel());
    if (abs(j.dq) < flow_floor) throw FlowError("|theta_q| below 1e-6 on the flow");
    max_inv = std::max(max_inv, 1 / abs(j.dq));
    // theta runs linearly from theta0 to 0 as t goes from 0 to 1: dq/dt = -theta0 / theta_q
    dq = -theta0 / j.dq;
    dz = -(j.dqz / j.dzz) * dq;
  };
  constexpr int kSteps = 16;
  if (!theta0.is_zero()) {
    const Real h = Real(1) / kSteps;
    for (int s = 0; s < kSteps; ++s) {
      MPComplex k1q, k1z, k2q, k2z, k3q, k3z, k4q, k4z;
      field(q, z, k1q, k1z);
      field(q + k1q * (h / 2), z + k1z * (h / 2), k2q, k2z);
      field(q + k2q * (h / 2), z + k2z * (h / 2), k3q, k3z);
      field(q + k3q * h, z + k3z * h, k4q, k4z);
      q += (k1q + 2 * k2q + 2 * k3q + k4q) * (h / 6);
      z += (k1z + 2 * k2z + 2 * k3z + k4z) * (h / 6);
      z = critical_newton(q, z);
      ++out.steps;
    }
  } else {
    MPComplex dq, dz;
    field(q, z, dq, dz);  // only records |1/theta_q| at the start
  }
  out.q_dagger = q;
  out.z_dagger = z;
  out.max_inv_theta_q = inv_theta_q_max ? *inv_theta_q_max : max_inv;
  out.bound = out.max_inv_theta_q * abs(theta0);
  return out;
}

}  // namespace ptheta
