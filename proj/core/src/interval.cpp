#include "ptheta/interval.hpp"

#include "ptheta/errors.hpp"

#include <algorithm>

namespace ptheta {

namespace bmp = boost::multiprecision;

namespace {

Interval widened(Real lo, Real hi) { return Interval(next_below(lo), next_above(hi)); }


}  // namespace

Interval::Interval() : lo_(0), hi_(0) {}

Interval::Interval(const Real& point) : lo_(point), hi_(point) {}

Interval::Interval(const Real& lo, const Real& hi) : lo_(lo), hi_(hi) {
  if (lo_ > hi_) throw DomainError("interval with lo > hi");
}

Real Interval::mid() const { return (lo_ + hi_) / 2; }

Real Interval::width() const { return next_above(hi_ - lo_); }

Real Interval::mag() const { return std::max(bmp::abs(lo_), bmp::abs(hi_)); }

Real Interval::mig() const {
  if (contains_zero()) return Real(0);
  return std::min(bmp::abs(lo_), bmp::abs(hi_));
}

Interval operator+(const Interval& a, const Interval& b) { return widened(a.lo_ + b.lo_, a.hi_ + b.hi_); }

Interval operator-(const Interval& a, const Interval& b) { return widened(a.lo_ - b.hi_, a.hi_ - b.lo_); }

Interval operator*(const Interval& a, const Interval& b) {
  Real p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
  Real lo = std::min(std::min(p1, p2), std::min(p3, p4));
  Real hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return widened(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  Interval inv = widened(1 / b.hi_, 1 / b.lo_);
  return a * inv;
}

Interval Interval::operator-() const { return Interval(-hi_, -lo_); }

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval sqr(const Interval& a) {
  Real m = a.mig(), M = a.mag();
  return widened(m * m, M * M);
}

Interval sqrt(const Interval& a) {
  if (a.lo() < 0) throw DomainError("sqrt of an interval with negative part");
  Real lo = bmp::sqrt(a.lo());
  return Interval(a.lo() == 0 ? Real(0) : next_below(lo), next_above(bmp::sqrt(a.hi())));
}

Interval exp(const Interval& a) {
  Real lo = next_below(bmp::exp(a.lo()));
  if (lo < 0) lo = 0;
  return Interval(lo, next_above(bmp::exp(a.hi())));
}

Interval log(const Interval& a) {
  if (a.lo() <= 0) throw DomainError("log of a non-positive interval");
  return widened(bmp::log(a.lo()), bmp::log(a.hi()));
}

Interval cos(const Interval& a) {
  const Real pi = pi_at(digits_of(a.lo()) + 5);
  if (a.hi() - a.lo() >= 2 * pi) return Interval(Real(-1), Real(1));
  Real c1 = bmp::cos(a.lo()), c2 = bmp::cos(a.hi());
  Real lo = std::min(c1, c2), hi = std::max(c1, c2);
  // Extrema of cos sit at integer multiples of pi; test against a slightly enlarged interval.
  Real slack = unit_roundoff(a.lo()) * 16 * (1 + a.mag());
  Real k0 = bmp::ceil((a.lo() - slack) / pi);
  for (Real k = k0; k * pi <= a.hi() + slack; k += 1) {
    bool even = bmp::fmod(bmp::abs(k), Real(2)) == 0;
    if (even) hi = 1;
    else lo = -1;
  }
  Real l = next_below(lo), h = next_above(hi);
  return Interval(std::max(l, Real(-1)), std::min(h, Real(1)));
}

Interval sin(const Interval& a) {
  const Real half_pi = pi_at(digits_of(a.lo()) + 5) / 2;
  return cos(a - Interval(half_pi));
}

Interval pow(const Interval& a, int n) {
  if (n < 0) return Interval(Real(1)) / pow(a, -n);
  if (n == 0) return Interval(Real(1));
  Interval base = a;
  if (n % 2 == 0) base = Interval(a.mig(), a.mag());
  Interval result(Real(1));
  if (base.lo() >= 0) {
    Interval b = base;
    int m = n;
    while (m > 0) {
      if (m & 1) result = result * b;
      m >>= 1;
      if (m > 0) b = b * b;
    }
    return result;
  }
  // odd power of an interval with a negative part is monotone
  for (int i = 0; i < n; ++i) result = result * a;
  return hull(result, widened(bmp::pow(a.lo(), n), bmp::pow(a.hi(), n)));
}

Interval pow(const Interval& a, const Real& r) { return exp(Interval(r) * log(a)); }

Interval inflate(const Interval& a, const Real& r) { return widened(a.lo() - r, a.hi() + r); }

ComplexBox ComplexBox::point(const MPComplex& z) { return ComplexBox(Interval(z.re()), Interval(z.im())); }

ComplexBox ComplexBox::corners(const MPComplex& ll, const MPComplex& ur) {
  return ComplexBox(Interval(ll.re(), ur.re()), Interval(ll.im(), ur.im()));
}

MPComplex ComplexBox::center() const { return MPComplex(re_.mid(), im_.mid()); }
MPComplex ComplexBox::lower_left() const { return MPComplex(re_.lo(), im_.lo()); }
MPComplex ComplexBox::upper_right() const { return MPComplex(re_.hi(), im_.hi()); }

Interval ComplexBox::modulus() const {
  Real m = re_.mig(), n = im_.mig();
  Real lo = bmp::sqrt(m * m + n * n);
  Real M = re_.mag(), N = im_.mag();
  Real hi = bmp::sqrt(M * M + N * N);
  Real l = next_below(lo);
  return Interval(l < 0 ? Real(0) : l, next_above(hi));
}

Interval ComplexBox::argument() const {
  const Real pi = pi_at(digits_of(re_.lo()) + 5);
  if (contains_zero() || (re_.lo() <= 0 && im_.contains_zero())) return Interval(-pi, pi);
  Real a[4] = {bmp::atan2(im_.lo(), re_.lo()), bmp::atan2(im_.lo(), re_.hi()),
               bmp::atan2(im_.hi(), re_.lo()), bmp::atan2(im_.hi(), re_.hi())};
  Real lo = a[0], hi = a[0];
  for (const Real& x : a) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  return Interval(next_below(next_below(lo)), next_above(next_above(hi)));
}

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) { return ComplexBox(a.re_ + b.re_, a.im_ + b.im_); }

ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) { return ComplexBox(a.re_ - b.re_, a.im_ - b.im_); }

ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
  return ComplexBox(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

ComplexBox operator*(const Interval& s, const ComplexBox& b) { return ComplexBox(s * b.re_, s * b.im_); }

ComplexBox hull(const ComplexBox& a, const ComplexBox& b) {
  return ComplexBox(hull(a.re(), b.re()), hull(a.im(), b.im()));
}

ComplexBox pow(const ComplexBox& a, int n) {
  if (n < 0) throw DomainError("negative power of a box");
  ComplexBox result = ComplexBox::point(MPComplex(Real(1), Real(0)));
  ComplexBox b = a;
  while (n > 0) {
    if (n & 1) result = result * b;
    n >>= 1;
    if (n > 0) b = b * b;
  }
  return result;
}

ComplexBox unit_phase(const Interval& t) { return ComplexBox(cos(t), sin(t)); }

ComplexBox inflate(const ComplexBox& a, const Real& r) { return ComplexBox(inflate(a.re(), r), inflate(a.im(), r)); }

Oscillation box_oscillation(std::span<const ComplexBox> boxes) {
  if (boxes.empty()) throw DomainError("oscillation of an empty cover");
  ComplexBox h = boxes[0];
  for (const ComplexBox& b : boxes.subspan(1)) h = hull(h, b);
  return {next_above(h.re().hi() - h.re().lo()), next_above(h.im().hi() - h.im().lo())};
}

}  // namespace ptheta
