#include <mpfr.h>
#include "ptheta/errors.hpp"
#include "ptheta/polynomial.hpp"
#include "ptheta/spectral.hpp"
#include "ptheta/theta.hpp"
#include "ptheta/zeros.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>

namespace ptheta {

namespace bmp = boost::multiprecision;

long resultant_order_at_zero(int s) {
  const long S = s;
  return S * (S + 1) / 2 + S * (S + 1) * (S - 1) / 3;
}

namespace {

MPComplex eliminate(const MPComplex& q, int s, int digits) {
  PrecisionScope scope(digits);
  const MPComplex qq = with_digits(q, digits);
  const Real aq = abs(qq);
  // z = lambda w balances the coefficient moduli; it multiplies the resultant by lambda^{s^2} > 0.
  const Real lambda = bmp::pow(aq, -Real(s + 1) / 2);
  std::vector<MPComplex> a(s + 1);
  {
    MPComplex qj(Real(1), Real(0)), A(Real(1), Real(0));
    Real lj(1);
    for (int j = 0; j <= s; ++j) {
      if (j > 0) {
        qj *= qq;
        A *= qj;
        lj *= lambda;
      }
      a[j] = A * lj;
    }
  }
  std::vector<MPComplex> b(s);
  for (int j = 0; j < s; ++j) b[j] = a[j + 1] * Real(j + 1);
  const int n = 2 * s - 1;
  std::vector<MPComplex> m(static_cast<std::size_t>(n) * n);
  auto at = [&](int r, int c) -> MPComplex& { return m[static_cast<std::size_t>(r) * n + c]; };
  for (int r = 0; r < s - 1; ++r)
    for (int j = 0; j <= s; ++j) at(r, r + j) = a[s - j];
  for (int r = 0; r < s; ++r)
    for (int j = 0; j < s; ++j) at(s - 1 + r, r + j) = b[s - 1 - j];
  // split storage so the update loop runs on raw MPFR calls without temporaries
  std::vector<Real> mr(m.size()), mi(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) {
    mr[k] = m[k].re();
    mi[k] = m[k].im();
  }
  auto idx = [n](int r, int c) { return static_cast<std::size_t>(r) * n + c; };
  MPComplex det(Real(1), Real(0));
  Real t(0), lr(0), li(0);
  for (int c = 0; c < n; ++c) {
    int p = c;
    Real best = bmp::abs(mr[idx(c, c)]) + bmp::abs(mi[idx(c, c)]);
    for (int r = c + 1; r < n; ++r) {
      Real v = bmp::abs(mr[idx(r, c)]) + bmp::abs(mi[idx(r, c)]);
      if (v > best) {
        best = v;
        p = r;
      }
    }
    if (best == 0) throw PrecisionError("Sylvester determinant vanished at working precision");
    if (p != c) {
      for (int k = c; k < n; ++k) {
        std::swap(mr[idx(p, k)], mr[idx(c, k)]);
        std::swap(mi[idx(p, k)], mi[idx(c, k)]);
      }
      det = -det;
    }
    const MPComplex piv(mr[idx(c, c)], mi[idx(c, c)]);
    det *= piv;
    const MPComplex inv = MPComplex(Real(1), Real(0)) / piv;
    for (int r = c + 1; r < n; ++r) {
      if (mr[idx(r, c)] == 0 && mi[idx(r, c)] == 0) continue;
      const MPComplex l = MPComplex(mr[idx(r, c)], mi[idx(r, c)]) * inv;
      lr = l.re();
      li = l.im();
      mpfr_ptr plr = lr.backend().data(), pli = li.backend().data(), pt = t.backend().data();
      for (int k = c + 1; k < n; ++k) {
        mpfr_ptr ar = mr[idx(r, k)].backend().data(), ai = mi[idx(r, k)].backend().data();
        mpfr_srcptr br = mr[idx(c, k)].backend().data(), bi = mi[idx(c, k)].backend().data();
        mpfr_fmms(pt, plr, br, pli, bi, MPFR_RNDN);
        mpfr_sub(ar, ar, pt, MPFR_RNDN);
        mpfr_fmma(pt, plr, bi, pli, br, MPFR_RNDN);
        mpfr_sub(ai, ai, pt, MPFR_RNDN);
      }
    }
  }
  // undo the balancing, then divide out the zero of order M at q = 0
  det /= bmp::pow(lambda, Real(s) * s);
  det /= powi(qq, resultant_order_at_zero(s));
  return det;
}

}  // namespace

MPComplex truncation_resultant(const MPComplex& q, int s) {
  if (s < 2) throw DomainError("truncation degree must be at least 2");
  if (q.is_zero()) return MPComplex(Real(s % 4 == 2 || s % 4 == 3 ? -1 : 1), Real(0));
  const int out_digits = std::max(q.precision(), kMinDigits);
  // Elimination cancels about (s^2/8) log10(1/|q|) digits; carry them as guard digits.
  const double lq = -std::log10(static_cast<double>(abs(q)));
  const int guard = static_cast<int>(std::ceil(s * s * std::max(lq, 0.0) / 8)) + 10;
  return with_digits(eliminate(q, s, out_digits + guard), out_digits);
}

namespace {

constexpr int kTrackDigits = 20;

struct Frame {
  bool polar = true;
  Real u_lo, u_hi, v_lo, v_hi;
  static constexpr int kLevels = 40;
  static constexpr std::int64_t kSpan = std::int64_t(1) << kLevels;
  Real u(std::int64_t i) const { return u_lo + (u_hi - u_lo) * Real(i) / Real(kSpan); }
  Real v(std::int64_t j) const { return v_lo + (v_hi - v_lo) * Real(j) / Real(kSpan); }
  MPComplex map(const Real& uu, const Real& vv) const { return polar ? ptheta::polar(uu, vv) : MPComplex(uu, vv); }
};

struct Cell {
  std::int64_t i0, i1, j0, j1;
  int winding;
};

class CellScanner {
 public:
  CellScanner(Frame frame, int s, Real spacing) : f_(std::move(frame)), s_(s), spacing_(std::move(spacing)) {}

  int winding(const Cell& c) {
    double total = edge(c.i0, c.j0, c.i1, c.j0) + edge(c.i1, c.j0, c.i1, c.j1) + edge(c.i1, c.j1, c.i0, c.j1) +
                   edge(c.i0, c.j1, c.i0, c.j0);
    double turns = total / (2 * M_PI);
    double r = std::round(turns);
    if (std::abs(turns - r) > 0.25) throw ContourError("cell argument variation is not a multiple of 2 pi");
    return static_cast<int>(r);
  }

  Real physical_u(const Cell& c) const { return f_.u(c.i1) - f_.u(c.i0); }
  Real physical_v(const Cell& c) const {
    Real dv = f_.v(c.j1) - f_.v(c.j0);
    return f_.polar ? dv * (f_.u(c.i0) + f_.u(c.i1)) / 2 : dv;
  }
  MPComplex center(const Cell& c) const {
    return f_.map((f_.u(c.i0) + f_.u(c.i1)) / 2, (f_.v(c.j0) + f_.v(c.j1)) / 2);
  }
  bool contains(const Cell& c, const MPComplex& q, const Real& inflate) const {
    Real uu, vv;
    if (f_.polar) {
      uu = abs(q);
      vv = arg(q);
      const Real two_pi = 2 * pi_at(working_digits());
      while (vv < f_.v(c.j0) - inflate * (f_.v(c.j1) - f_.v(c.j0))) vv += two_pi;
      while (vv > f_.v(c.j1) + inflate * (f_.v(c.j1) - f_.v(c.j0))) vv -= two_pi;
    } else {
      uu = q.re();
      vv = q.im();
    }
    Real du = (f_.u(c.i1) - f_.u(c.i0)) * inflate, dv = (f_.v(c.j1) - f_.v(c.j0)) * inflate;
    return uu >= f_.u(c.i0) - du && uu <= f_.u(c.i1) + du && vv >= f_.v(c.j0) - dv && vv <= f_.v(c.j1) + dv;
  }
  long evaluations() const { return evaluations_; }

 private:
  double edge(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    bool flip = std::make_pair(a, b) > std::make_pair(c, d);
    std::array<std::int64_t, 4> key = flip ? std::array<std::int64_t, 4>{c, d, a, b}
                                           : std::array<std::int64_t, 4>{a, b, c, d};
    auto it = cache_.find(key);
    double value;
    if (it != cache_.end()) {
      value = it->second;
    } else {
      const Real u0 = f_.u(key[0]), v0 = f_.v(key[1]), u1 = f_.u(key[2]), v1 = f_.v(key[3]);
      auto gamma = [&](const Real& t) { return f_.map(u0 + (u1 - u0) * t, v0 + (v1 - v0) * t); };
      const int s = s_;
      // argument tracking needs only a few correct digits of the resultant
      HolomorphicFn fn = [s](const MPComplex& q) { return truncation_resultant(with_digits(q, kTrackDigits), s); };
      // coarse samples no further apart than the grid resolution, so zeros closer to the edge
      // than that are what the tracker can miss
      Real len = f_.polar && key[0] == key[2] ? bmp::abs(v1 - v0) * u0 : bmp::abs(u1 - u0) + bmp::abs(v1 - v0);
      const int samples = static_cast<int>(std::min(Real(4096), std::max(Real(8), bmp::ceil(len / spacing_))));
      SegmentTrack tr = track_segment(gamma, fn, samples, false, true);
      evaluations_ += tr.evaluations;
      value = tr.arg_change;
      cache_.emplace(key, value);
    }
    return flip ? -value : value;
  }

  Frame f_;
  int s_;
  Real spacing_;
  std::map<std::array<std::int64_t, 4>, double> cache_;
  long evaluations_ = 0;
};

struct NewtonOutcome {
  MPComplex q, z;
  bool converged = false;
  int steps = 0;
};

// Newton on (P, P_z) for the truncation P = theta_(s).
NewtonOutcome truncated_newton(MPComplex q, MPComplex z, int s, int max_steps = 50) {
  NewtonOutcome out;
  const Real stop = bmp::pow(Real(10), -(working_digits() - 6));
  for (int i = 0; i < max_steps; ++i) {
    ThetaJet j = eval_truncation_jet(q, z, s);
    MPComplex det = j.dq * j.dzz - j.dz * j.dqz;
    if (det.is_zero()) break;
    MPComplex dq = (j.value * j.dzz - j.dz * j.dz) / det;
    MPComplex dz = (j.dq * j.dz - j.dqz * j.value) / det;
    q -= dq;
    z -= dz;
    out.steps = i + 1;
    if (norm(q) >= 1) break;
    if (abs(dq) <= stop && abs(dz) <= stop * (1 + abs(z))) {
      out.converged = true;
      break;
    }
  }
  out.q = std::move(q);
  out.z = std::move(z);
  return out;
}

// Seed for the double zero: midpoint of the closest pair of roots of theta_(s)(q, .).
MPComplex closest_pair_midpoint(const MPComplex& q, int s) {
  std::vector<MPComplex> c;
  MPComplex qj(Real(1), Real(0)), A(Real(1), Real(0));
  for (int j = 0; j <= s; ++j) {
    if (j > 0) {
      qj *= q;
      A *= qj;
    }
    c.push_back(A);
  }
  PolyRoots pr = aberth_roots(c);
  std::size_t bi = 0, bj = 1;
  Real best(-1);
  for (std::size_t i = 0; i < pr.roots.size(); ++i)
    for (std::size_t k = i + 1; k < pr.roots.size(); ++k) {
      Real d = abs(pr.roots[i] - pr.roots[k]) / (1 + abs(pr.roots[i]));
      if (best < 0 || d < best) {
        best = d;
        bi = i;
        bj = k;
      }
    }
  return (pr.roots[bi] + pr.roots[bj]) / Real(2);
}

ScanCandidate polish(const MPComplex& qc, int s, const Real& radius) {
  ScanCandidate cand;
  cand.q = qc;
  cand.cell_radius = radius;
  cand.z = closest_pair_midpoint(qc, s);
  NewtonOutcome nw = truncated_newton(qc, cand.z, s);
  if (nw.converged && abs(nw.q - qc) <= 3 * radius) {
    cand.q = nw.q;
    cand.z = nw.z;
    cand.polished = true;
  }
  return cand;
}

// Number of real zeros of theta_(s)(x, .). On the real axis spectral values are double zeros of the
// resultant, so no sign change marks them; the real zero count jumps by a multiple of 2 instead.
int real_zero_count(const Real& x, int s) {
  std::vector<MPComplex> c;
  Real xj(1), A(1);
  for (int j = 0; j <= s; ++j) {
    if (j > 0) {
      xj *= x;
      A *= xj;
    }
    c.emplace_back(A, Real(0));
  }
  const Real tol = bmp::pow(Real(10), -(working_digits() / 2));
  int n = 0;
  for (const MPComplex& r : aberth_roots(c).roots)
    if (bmp::abs(r.im()) <= tol * abs(r)) ++n;
  return n;
}

std::vector<ScanCandidate> scan_real_segment(int s, const Real& a, const Real& b, int grid) {
  std::vector<ScanCandidate> out;
  const Real h = (b - a) / grid;
  Real x0 = a;
  int n0 = real_zero_count(a, s);
  for (int i = 1; i <= grid; ++i) {
    Real x1 = a + h * i;
    int n1 = real_zero_count(x1, s);
    if (n1 != n0) {
      Real lo = x0, hi = x1;
      for (int it = 0; it < 30; ++it) {
        Real mid = (lo + hi) / 2;
        if (real_zero_count(mid, s) == n0)
          lo = mid;
        else
          hi = mid;
      }
      ScanCandidate c = polish(MPComplex((lo + hi) / 2, Real(0)), s, h);
      c.winding = 2;
      out.push_back(std::move(c));
    }
    x0 = x1;
    n0 = n1;
  }
  return out;
}

}  // namespace

std::vector<ScanCandidate> resultant_scan(int s, const ScanRegion& region, int grid) {
  if (s < 5 || s > 40) throw DomainError("truncation degree must lie in [5, 40]");
  if (grid < 2) throw DomainError("grid must be at least 2");
  PrecisionScope scope(std::max(working_digits(), kMinDigits));
  Frame frame;
  Real diameter;
  if (const auto* box = std::get_if<ComplexBox>(&region)) {
    if (box->modulus().hi() >= 1) throw DomainError("scan region must lie inside |q| < 1");
    if (box->is_real_segment()) return scan_real_segment(s, box->re().lo(), box->re().hi(), grid);
    frame.polar = false;
    frame.u_lo = box->re().lo();
    frame.u_hi = box->re().hi();
    frame.v_lo = box->im().lo();
    frame.v_hi = box->im().hi();
    diameter = abs(box->upper_right() - box->lower_left());
  } else {
    const Annulus& ann = std::get<Annulus>(region);
    if (ann.r_out >= 1 || ann.r_in < 0 || ann.r_in >= ann.r_out) throw DomainError("invalid annulus");
    // Every term-dominance circle separates zeros of theta_(s) once |q| <= c0 > 0.2, so the
    // resultant has no zeros there; skipping that disk avoids very small |q|.
    const Real zero_free(0.2);
    if (ann.r_out <= zero_free) return {};
    const Real pi = pi_at(working_digits());
    frame.polar = true;
    frame.u_lo = std::max(ann.r_in, zero_free);
    frame.u_hi = ann.r_out;
    // cell boundaries at angles -pi/3 + 2 pi k / 2^L never meet the real axis
    frame.v_lo = -pi / 3;
    frame.v_hi = -pi / 3 + 2 * pi;
    diameter = 2 * ann.r_out;
  }
  const Real resolution = diameter / grid;
  CellScanner scanner(frame, s, resolution);
  Cell root{0, Frame::kSpan, 0, Frame::kSpan, 0};
  root.winding = scanner.winding(root);
  std::vector<Cell> work{root};
  std::vector<Cell> leaves;
  std::vector<ScanCandidate> early;
  while (!work.empty()) {
    Cell c = work.back();
    work.pop_back();
    if (c.winding == 0) continue;
    Real du = scanner.physical_u(c), dv = scanner.physical_v(c);
    const Real diam = bmp::sqrt(du * du + dv * dv);
    if (diam < resolution || (c.i1 - c.i0 < 2 && c.j1 - c.j0 < 2)) {
      leaves.push_back(c);
      continue;
    }
    // The symmetry z -> q^-(s+1)/z of theta_(s) makes every spectral value a double zero of the
    // resultant, so winding 2 means one point; stop early once Newton lands inside the cell.
    if (c.winding == 2 && diam < 16 * resolution) {
      ScanCandidate cand = polish(scanner.center(c), s, diam / 2);
      if (cand.polished && scanner.contains(c, cand.q, Real(0))) {
        cand.winding = c.winding;
        early.push_back(std::move(cand));
        continue;
      }
    }
    Cell a = c, b = c;
    if ((du >= dv && c.i1 - c.i0 >= 2) || c.j1 - c.j0 < 2) {
      std::int64_t m = (c.i0 + c.i1) / 2;
      a.i1 = m;
      b.i0 = m;
    } else {
      std::int64_t m = (c.j0 + c.j1) / 2;
      a.j1 = m;
      b.j0 = m;
    }
    a.winding = scanner.winding(a);
    b.winding = c.winding - a.winding;
    work.push_back(b);
    work.push_back(a);
  }
  std::vector<ScanCandidate> out = std::move(early);
  for (const Cell& c : leaves) {
    Real du = scanner.physical_u(c), dv = scanner.physical_v(c);
    ScanCandidate cand = polish(scanner.center(c), s, bmp::sqrt(du * du + dv * dv) / 2);
    if (cand.polished && !scanner.contains(c, cand.q, Real(1))) cand.polished = false;
    cand.winding = c.winding;
    out.push_back(std::move(cand));
  }
  std::sort(out.begin(), out.end(), [](const ScanCandidate& x, const ScanCandidate& y) {
    Real ax = abs(x.q), ay = abs(y.q);
    if (ax != ay) return ax < ay;
    return arg(x.q) < arg(y.q);
  });
  return out;
}

}  // namespace ptheta
