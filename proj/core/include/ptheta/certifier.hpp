#pragma once

#include "ptheta/interval.hpp"
#include "ptheta/mpnum.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ptheta {

using Rational = boost::multiprecision::cpp_rational;

// Rectangles around the complex pair v_+ and its double zero.
struct ProofConstants {
  Rational rho;       // 0.4353184958
  Rational tau_rect;  // 0.1230440086
  Rational epsilon;   // 2e-10
  ComplexBox U;       // [rho -+ eps] x [tau -+ eps]
  ComplexBox V;       // [-5.965, -5.961] x [6.102, 6.106]
  MPComplex A, B, C, D;
  Real alpha0;
  Real delta;  // |2(1+i) eps / (rho + i tau - (1+i) eps)|

  MPComplex center() const;  // rho + i tau
  static ProofConstants standard();
};

// Enclosure of an exact rational at the working precision.
Interval enclose(const Rational& x);
Real to_real(const Rational& x);

enum class CertStatus { passed, failed, inconclusive };
std::string to_string(CertStatus s);

struct CertCheck {
  std::string name;
  Real value;
  std::string reference;  // what the value is compared with
  Real margin;            // > 0 when the check holds
  bool gating = true;     // informational checks never change the verdict
  bool passed() const { return margin > 0; }
};

struct CertReport {
  std::string lemma_id;
  int subdivision_depth = 0;
  long cells_checked = 0;
  Real worst_margin;
  CertStatus status = CertStatus::failed;
  std::vector<CertCheck> checks;
  bool passed() const { return status == CertStatus::passed; }
  const CertCheck* find(const std::string& name) const;
};

// |L| > M on C_k: margin 1 - (2 sum_{nu<=k} x^{nu^2/2} + sum_{nu>k} x^{nu^2/2}).
CertReport circle_domination(const Real& qabs, int k);

// No zero of theta_r on |z| = |q|^-2 for q in U: tail bound plus sign conditions of theta_(4)
// on four t-ranges. subdiv caps the bisection depth of each range.
CertReport verify_lemma_separ(int subdiv);

struct LemmaBoxes {
  ComplexBox theta_star;  // over U x V, series tail included
  ComplexBox theta_qz;
  Real theta_star_tail;   // monomials past 21 q^25 z^5
  Real theta_qz_tail;     // sup |theta^0|, theta^0 = theta_qz - (theta_qz)_(6)
  Real theta_qz_high_oscillation;  // max(DR, DI) of theta^0
  long cells = 0;
};

// Enclosures of theta* and theta_qz over U x V on a 2^subdiv x 2^subdiv grid of V.
LemmaBoxes lemma_box_enclosures(int subdiv);

// Monomials 3q^3z .. 21q^25z^5 of theta* (table = star) or 6q^2z .. 196q^27z^6 of theta_qz.
enum class MonomialTable { theta_star, theta_qz };
std::vector<MPComplex> monomial_row(MonomialTable table, const MPComplex& q, const MPComplex& z);

CertReport verify_lemma_boxes(int subdiv);

// Needs at least 40 digits.
CertReport verify_homotopy_bound(int subdiv = 3);

CertReport audit_theorem_constants();

}  // namespace ptheta
