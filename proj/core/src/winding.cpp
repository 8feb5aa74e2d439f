#include "ptheta/errors.hpp"
#include "ptheta/theta.hpp"
#include "ptheta/zeros.hpp"

#include <cmath>

namespace ptheta {

namespace bmp = boost::multiprecision;

HolomorphicFn theta_function(const MPComplex& q) {
  const int digits = std::max(q.precision(), kMinDigits);
  Real rel;
  {
    PrecisionScope scope(digits);
    rel = bmp::pow(Real(10), -(digits - 12));
  }
  return [q, rel](const MPComplex& z) { return eval_theta_relative(q, z, rel).value; };
}

HolomorphicFn truncation_function(const MPComplex& q, int s) {
  return [q, s](const MPComplex& z) { return eval_truncation(q, z, s); };
}

namespace {

struct Sample {
  Real t;
  MPComplex f;
  Real n2;  // |f|^2
  bool coarse = true;
};

// Principal argument of b / a in (-pi, pi], computed in double after normalization.
double arg_step(const MPComplex& a, const MPComplex& b) {
  MPComplex w = b * conj(a);
  Real m = std::max(bmp::abs(w.re()), bmp::abs(w.im()));
  if (m == 0) return 0.0;
  return std::atan2(static_cast<double>(w.im() / m), static_cast<double>(w.re() / m));
}

bool short_chord(const Sample& a, const Sample& b) { return norm(b.f - a.f) < std::min(a.n2, b.n2); }

}  // namespace

SegmentTrack track_segment(const std::function<MPComplex(const Real&)>& gamma, const HolomorphicFn& f,
                           int samples, bool closed, bool relative_accuracy) {
  if (samples < 1) throw DomainError("too few samples");
  constexpr long kCap = 1L << 20;
  SegmentTrack out;
  Real scale2(0);
  const int digits = working_digits();
  const Real resolution2 = bmp::pow(Real(10), -2 * (digits - 8));
  auto sample = [&](const Real& t) {
    Sample s{t, f(gamma(t)), Real(0), true};
    s.n2 = norm(s.f);
    if (s.n2 > scale2) scale2 = s.n2;
    ++out.evaluations;
    return s;
  };
  std::vector<Sample> stack;
  stack.reserve(static_cast<std::size_t>(samples) + 64);
  Sample first = sample(Real(0));
  if (closed) {
    Sample closing = first;
    closing.t = 1;
    stack.push_back(closing);
  } else {
    stack.push_back(sample(Real(1)));
  }
  for (int i = samples - 1; i >= 1; --i) stack.push_back(sample(Real(i) / samples));
  Real min2 = first.n2;
  for (const Sample& s : stack) min2 = std::min(min2, s.n2);
  double total = 0.0;
  Sample cur = first;
  const Real min_dt = bmp::pow(Real(2), -40);
  while (!stack.empty()) {
    const Sample& nxt = stack.back();
    const Real floor2 = relative_accuracy ? Real(0) : scale2 * resolution2;
    if (cur.n2 <= floor2 || nxt.n2 <= floor2)
      throw ContourError("function vanishes on the contour to working resolution");
    // a chord between two coarse samples is accepted only when its halves pass too, which
    // catches full turns hidden between samples of similar value
    const bool ok = short_chord(cur, nxt);
    if (ok && !(cur.coarse && nxt.coarse)) {
      total += arg_step(cur.f, nxt.f);
      cur = nxt;
      stack.pop_back();
      continue;
    }
    if (out.evaluations >= kCap || nxt.t - cur.t < min_dt)
      throw ContourError("argument tracking exhausted the sample budget");
    Sample mid = sample((cur.t + nxt.t) / 2);
    mid.coarse = false;
    min2 = std::min(min2, mid.n2);
    if (ok && short_chord(cur, mid) && short_chord(mid, nxt)) {
      total += arg_step(cur.f, mid.f) + arg_step(mid.f, nxt.f);
      cur = nxt;
      stack.pop_back();
      continue;
    }
    stack.push_back(std::move(mid));
  }
  out.arg_change = total;
  out.min_abs = bmp::sqrt(min2);
  return out;
}

ArgumentTrack track_argument(const std::function<MPComplex(const Real&)>& gamma, const HolomorphicFn& f,
                             int samples) {
  if (samples < 4) throw DomainError("too few samples");
  SegmentTrack tr = track_segment(gamma, f, samples, true);
  const double turns = tr.arg_change / (2 * M_PI);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 0.25) throw ContourError("argument variation is not an integer multiple of 2 pi");
  ArgumentTrack out;
  out.winding = static_cast<int>(rounded);
  out.evaluations = tr.evaluations;
  out.min_abs = tr.min_abs;
  return out;
}

WindingResult winding_count(const MPComplex& q, const Real& radius, const HolomorphicFn& f, int samples,
                            const MPComplex& center) {
  if (samples < 64) throw DomainError("winding_count needs at least 64 samples");
  if (radius <= 0) throw DomainError("radius must be positive");
  PrecisionScope scope(std::max({q.precision(), center.precision(), digits_of(radius)}));
  const Real two_pi = 2 * pi_at(working_digits());
  const Real aq = abs(q);
  const Real factors[] = {Real(0), Real(1) / 8, Real(-1) / 8, Real(1) / 4, Real(-1) / 4};
  WindingResult out;
  std::string last_error;
  for (int attempt = 0; attempt < 5; ++attempt) {
    Real r = attempt == 0 || aq == 0 ? radius : radius * bmp::pow(aq, factors[attempt]);
    auto gamma = [&](const Real& t) { return center + polar(r, two_pi * t); };
    try {
      ArgumentTrack tr = track_argument(gamma, f, samples);
      out.count = tr.winding;
      out.radius = r;
      out.perturbations = attempt;
      out.evaluations += tr.evaluations;
      return out;
    } catch (const ContourError& e) {
      last_error = e.what();
    }
  }
  throw ContourError("winding count failed on all perturbed radii: " + last_error);
}

Real circle_radius(const MPComplex& q, int k) {
  PrecisionScope scope(q.precision());
  return bmp::pow(abs(q), -Real(k) - Real("0.5"));
}

}  // namespace ptheta
