#include "ptheta/errors.hpp"
#include "ptheta/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

namespace ptheta {

namespace bmp = boost::multiprecision;

namespace {

// theta(q, x) and two x-derivatives for real q and x, summed until the terms drop below
// eps times the largest one.
struct RealJet {
  Real v, d1, d2;
};

RealJet real_jet(const Real& q, const Real& x, const Real& eps) {
  RealJet out{Real(1), Real(0), Real(0)};
  Real t(1), qj(1), peak(1);
  for (int j = 1;; ++j) {
    qj *= q;
    t *= qj * x;  // q^{j(j+1)/2} x^j
    out.v += t;
    out.d1 += t * j / x;
    out.d2 += t * (Real(j) * (j - 1)) / (x * x);
    Real a = bmp::abs(t) * (Real(j) * j + 1);
    if (a > peak) peak = a;
    if (a < eps * peak && bmp::abs(qj * q * x) < Real(0.5)) break;
    if (j > 100000) throw ConvergenceError("real series did not converge");
  }
  return out;
}

struct Critical {
  Real x;
  Real value;
  bool maximum;  // theta_xx < 0
};

// Locating events needs only modest accuracy; refine_double_zero restores full precision.
constexpr int kMarchDigits = 20;

class Marcher {
 public:
  Marcher(RealSign sign, const RealTableOptions& o) : sign_(sign), opt_(o) {}

  Real q_of(const Real& r) const { return sign_ == RealSign::positive ? r : Real(-r); }

  // Working digits at modulus r: base plus the decimal size of the largest term over the window.
  int digits_at(double r) const {
    const double lq = std::log10(r);
    const double lz = std::log10(x_hi_);
    double best = 0;
    for (int j = 1; j < 5000; ++j) best = std::max(best, j * (j + 1) / 2.0 * lq + j * lz);
    return kMarchDigits + static_cast<int>(std::ceil(best)) + 5;
  }

  std::optional<Real> newton_critical(const Real& q, Real x, const Real& eps) const {
    const Real tol = eps * 1000;
    for (int i = 0; i < 60; ++i) {
      RealJet j = real_jet(q, x, eps);
      if (j.d2 == 0) return std::nullopt;
      Real dx = j.d1 / j.d2;
      x -= dx;
      if (bmp::abs(dx) <= tol * bmp::abs(x)) return x;
    }
    return std::nullopt;
  }

  // Safeguarded Newton on theta_x inside a sign-change bracket.
  std::optional<Real> bracketed_critical(const Real& q, Real lo, Real hi, Real flo, const Real& eps) const {
    const Real tol = eps * 1000;
    Real x = (lo + hi) / 2;
    for (int i = 0; i < 200; ++i) {
      RealJet j = real_jet(q, x, eps);
      if ((j.d1 < 0) == (flo < 0)) {
        lo = x;
        flo = j.d1;
      } else {
        hi = x;
      }
      Real nx = j.d2 != 0 ? Real(x - j.d1 / j.d2) : Real((lo + hi) / 2);
      if (!(nx > std::min(lo, hi) && nx < std::max(lo, hi))) nx = (lo + hi) / 2;
      const Real dx = bmp::abs(nx - x);
      x = nx;
      if (dx <= tol * bmp::abs(x)) return x;
    }
    return std::nullopt;
  }

  Critical make_critical(const Real& q, const Real& x, const Real& eps) const {
    RealJet j = real_jet(q, x, eps);
    return Critical{x, j.v, j.d2 < 0};
  }

  // All critical points of theta(q, .) in the window, from sign changes of theta_x on a log grid.
  std::vector<Critical> scan(const Real& q, const Real& eps) const {
    std::vector<Critical> out;
    const double r = static_cast<double>(bmp::abs(q));
    const double dt = std::min(0.02, -std::log(r) / 4);
    const double t0 = std::log(x_lo_), t1 = std::log(x_hi_);
    const int n = static_cast<int>(std::ceil((t1 - t0) / dt));
    std::vector<double> sides{-1.0};
    if (sign_ == RealSign::negative) sides.push_back(1.0);
    for (double side : sides) {
      Real xa = Real(side) * bmp::exp(Real(t0));
      Real fa = real_jet(q, xa, eps).d1;
      for (int i = 1; i <= n; ++i) {
        Real xb = Real(side) * bmp::exp(Real(t0 + (t1 - t0) * i / n));
        Real fb = real_jet(q, xb, eps).d1;
        if ((fa < 0) != (fb < 0)) {
          auto x = bracketed_critical(q, xa, xb, fa, eps);
          if (x) out.push_back(make_critical(q, *x, eps));
        }
        xa = xb;
        fa = fb;
      }
    }
    return out;
  }

  // Critical point at modulus r continued from x_prev; nullopt when it disappears or jumps.
  std::optional<Critical> follow(const Real& r, const Critical& c, const Real& eps) const {
    const Real q = q_of(r);
    auto x = newton_critical(q, c.x, eps);
    if (!x || (*x < 0) != (c.x < 0)) return std::nullopt;
    if (bmp::abs(*x - c.x) > Real(0.25) * bmp::abs(c.x)) return std::nullopt;
    Critical n = make_critical(q, *x, eps);
    if (n.maximum != c.maximum) return std::nullopt;
    return n;
  }

  // Bisection on r for the zero of the critical value, then a full double-zero refinement.
  SpectralPoint refine_event(Real ra, Real rb, Critical ca, const Real& eps) const {
    const bool sa = ca.value < 0;
    Critical cur = ca;
    while (rb - ra > Real(1e-14)) {
      Real rm = (ra + rb) / 2;
      auto cm = follow(rm, cur, eps);
      if (!cm) break;
      if ((cm->value < 0) == sa) {
        ra = rm;
        cur = *cm;
      } else {
        rb = rm;
      }
    }
    const Real rm = (ra + rb) / 2;
    PrecisionScope scope(opt_.base_digits);
    MPComplex q0(with_digits(q_of(rm), opt_.base_digits), Real(0));
    MPComplex z0(with_digits(cur.x, opt_.base_digits), Real(0));
    return refine_double_zero(q0, z0, true);
  }

  std::vector<SpectralPoint> run(int count) {
    std::vector<SpectralPoint> found;
    double r = opt_.r_start;
    int digits = digits_at(r);
    std::optional<PrecisionScope> scope;
    scope.emplace(digits);
    Real eps = bmp::pow(Real(10), -(digits - 2));
    std::vector<Critical> crit = scan(q_of(Real(r)), eps);
    while (static_cast<int>(found.size()) < count) {
      double step = std::min(0.01, opt_.step_scale * (1 - r) * (1 - r));
      double rn = std::min(r + step, opt_.r_stop);
      if (rn <= r) break;
      int dn = digits_at(rn);
      if (dn > digits) {
        digits = dn;
        scope.reset();
        scope.emplace(digits);
        eps = bmp::pow(Real(10), -(digits - 2));
        for (Critical& c : crit) c = make_critical(q_of(Real(r)), with_digits(c.x, digits), eps);
      }
      const Real R0(r), R1(rn);
      std::vector<Critical> next = scan(q_of(R1), eps);
      // match critical points of the same type by mutual nearest neighbour in log |x|
      auto dist = [](const Critical& a, const Critical& b) {
        if ((a.x < 0) != (b.x < 0) || a.maximum != b.maximum) return 1e300;
        return std::abs(std::log(static_cast<double>(a.x / b.x)));
      };
      auto nearest = [&](const Critical& a, const std::vector<Critical>& list) {
        std::size_t best = list.size();
        double bd = 1e300;
        for (std::size_t i = 0; i < list.size(); ++i)
          if (double d = dist(a, list[i]); d < bd) {
            bd = d;
            best = i;
          }
        return best;
      };
      std::vector<std::pair<Real, SpectralPoint>> events;
      for (std::size_t ia = 0; ia < crit.size(); ++ia) {
        const Critical& c = crit[ia];
        std::size_t ib = nearest(c, next);
        if (ib == next.size() || nearest(next[ib], crit) != ia) continue;
        if ((next[ib].value < 0) != (c.value < 0)) {
          SpectralPoint p = refine_event(R0, R1, c, eps);
          bool dup = false;
          for (const SpectralPoint& f : found)
            if (abs(f.q - p.q) < Real(1e-8)) dup = true;
          for (const auto& e : events)
            if (abs(e.second.q - p.q) < Real(1e-8)) dup = true;
          if (!dup) events.emplace_back(abs(p.q), std::move(p));
        }
      }
      std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (auto& e : events) found.push_back(std::move(e.second));
      crit = std::move(next);
      r = rn;
      if (rn >= opt_.r_stop) break;
    }
    if (static_cast<int>(found.size()) > count) found.resize(count);
    const int validated = sign_ == RealSign::positive ? kPositiveTableSize : kNegativeTableSize;
    for (std::size_t i = 0; i < found.size(); ++i) found[i].validated = static_cast<int>(i) < validated;
    return found;
  }

 private:
  RealSign sign_;
  RealTableOptions opt_;
  double x_lo_ = sign_ == RealSign::positive ? 0.5 : 0.3;
  double x_hi_ = sign_ == RealSign::positive ? 40.0 : 30.0;
};

}  // namespace

std::vector<SpectralPoint> real_spectrum_table(int count, RealSign sign, const RealTableOptions& options) {
  if (count < 1) throw DomainError("count must be positive");
  if (!(options.r_start > 0 && options.r_start < options.r_stop && options.r_stop < 1))
    throw DomainError("need 0 < r_start < r_stop < 1");
  if (!(options.step_scale > 0)) throw DomainError("step_scale must be positive");
  if (options.base_digits < kMinDigits) throw DomainError("precision below 16 digits");
  Marcher m(sign, options);
  std::vector<SpectralPoint> out = m.run(count);
  if (static_cast<int>(out.size()) < count) throw ConvergenceError("marching ended before the requested count");
  return out;
}

}  // namespace ptheta
