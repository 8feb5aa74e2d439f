#include "ptheta/errors.hpp"
#include "ptheta/theta.hpp"

namespace ptheta {

namespace {

Interval up(const Real& x) { return Interval(x); }

}  // namespace

ThetaBoxJet eval_jet_box(const ComplexBox& q, const ComplexBox& z, const Real& tol) {
  const Real qm = q.modulus().hi(), zm = z.modulus().hi();
  if (!(qm < 1)) throw DomainError("box must lie inside |q| < 1");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  const ComplexBox one = ComplexBox::point(MPComplex(Real(1), Real(0)));
  ThetaBoxJet out;
  out.value = one;
  out.dz = out.dzz = out.dq = out.dqz = ComplexBox::point(MPComplex(Real(0), Real(0)));
  // running products q^{e_j} z^j, q^{e_j} z^{j-1}, q^{e_j} z^{j-2}, q^{e_j - 1} z^j, q^{e_j - 1} z^{j-1}
  ComplexBox qj = one, t = one, d1 = one, d2 = one, a1 = one, a2 = one;
  // majorant of all five terms past j: qm^{e_j - 1} zm^{j-2} max(1, zm)^2 (e_j j + j^2 + e_j + j + 1)
  const Interval QM = up(qm), ZM = up(zm), Z2 = sqr(up(std::max(Real(1), zm)));
  for (int j = 1;; ++j) {
    qj = qj * q;
    const ComplexBox step = qj * z;
    const long e = static_cast<long>(j) * (j + 1) / 2;
    if (j == 1) {
      t = step;
      d1 = q;
      a1 = z;
      a2 = one;
    } else {
      t = t * step;
      d1 = d1 * step;
      a1 = a1 * step;
      a2 = a2 * step;
      d2 = j == 2 ? q * q * q : d2 * step;
    }
    const Interval J{Real(j)}, E{Real(e)};
    out.value = out.value + t;
    out.dz = out.dz + J * d1;
    if (j >= 2) out.dzz = out.dzz + (J * Interval(Real(j - 1))) * d2;
    out.dq = out.dq + E * a1;
    out.dqz = out.dqz + (E * J) * a2;
    out.terms_used = j + 1;

    // majorant of the first dropped index j + 1
    const int k = j + 1;
    const long ek = static_cast<long>(k) * (k + 1) / 2;
    const Interval K{Real(k)}, EK{Real(ek)};
    const Interval mk = pow(QM, static_cast<int>(ek - 1)) * pow(ZM, k) / sqr(ZM) * Z2 *
                        (EK * K + K * K + EK + K + Interval(Real(1)));
    const Interval ratio = pow(QM, k + 1) * ZM * pow(Interval(Real(k + 1)) / K, 4);
    if (j >= 2 && ratio.hi() <= Real(0.5) && mk.hi() <= tol / 2) {
      const Real r = (Interval(Real(2)) * mk).hi();
      out.value = inflate(out.value, r);
      out.dz = inflate(out.dz, r);
      out.dzz = inflate(out.dzz, r);
      out.dq = inflate(out.dq, r);
      out.dqz = inflate(out.dqz, r);
      break;
    }
    if (j > 20000) throw PrecisionError("box series did not reach the tolerance");
  }
  return out;
}

}  // namespace ptheta
