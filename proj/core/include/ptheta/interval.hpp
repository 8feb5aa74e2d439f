#pragma once

#include "ptheta/mpnum.hpp"

#include <span>

namespace ptheta {

// Closed real interval; every operation widens the result outward by one ulp per endpoint.
class Interval {
 public:
  Interval();
  explicit Interval(const Real& point);
  Interval(const Real& lo, const Real& hi);

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  Real mid() const;
  Real width() const;
  Real mag() const;  // max |x|
  Real mig() const;  // min |x|
  bool contains(const Real& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return lo_ <= 0 && hi_ >= 0; }
  bool positive() const { return lo_ > 0; }
  bool negative() const { return hi_ < 0; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;

 private:
  Real lo_;
  Real hi_;
};

Interval hull(const Interval& a, const Interval& b);
Interval sqr(const Interval& a);
Interval sqrt(const Interval& a);
Interval exp(const Interval& a);
Interval log(const Interval& a);
Interval cos(const Interval& a);
Interval sin(const Interval& a);
Interval pow(const Interval& a, int n);
// a^r for a > 0 and real r.
Interval pow(const Interval& a, const Real& r);
Interval inflate(const Interval& a, const Real& r);

class ComplexBox {
 public:
  ComplexBox() = default;
  ComplexBox(Interval re, Interval im) : re_(std::move(re)), im_(std::move(im)) {}
  static ComplexBox point(const MPComplex& z);
  static ComplexBox corners(const MPComplex& lower_left, const MPComplex& upper_right);

  const Interval& re() const { return re_; }
  const Interval& im() const { return im_; }
  MPComplex center() const;
  MPComplex lower_left() const;
  MPComplex upper_right() const;
  bool contains(const MPComplex& z) const { return re_.contains(z.re()) && im_.contains(z.im()); }
  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  // A box with zero imaginary width on the real axis.
  bool is_real_segment() const { return im_.lo() == 0 && im_.hi() == 0; }

  Interval modulus() const;
  // Enclosure of arg over the box; requires the box to avoid the closed negative real axis.
  Interval argument() const;

  friend ComplexBox operator+(const ComplexBox& a, const ComplexBox& b);
  friend ComplexBox operator-(const ComplexBox& a, const ComplexBox& b);
  friend ComplexBox operator*(const ComplexBox& a, const ComplexBox& b);
  friend ComplexBox operator*(const Interval& s, const ComplexBox& b);
  ComplexBox operator-() const { return ComplexBox(-re_, -im_); }

 private:
  Interval re_;
  Interval im_;
};

ComplexBox hull(const ComplexBox& a, const ComplexBox& b);
ComplexBox pow(const ComplexBox& a, int n);
// e^{i t} for t in the interval.
ComplexBox unit_phase(const Interval& t);
ComplexBox inflate(const ComplexBox& a, const Real& r);

struct Oscillation {
  Real dr;  // sup |Re f(p) - Re f(p')|
  Real di;  // sup |Im f(p) - Im f(p')|
};

// Oscillation bounds of a function enclosed cell by cell by the given boxes.
Oscillation box_oscillation(std::span<const ComplexBox> boxes);

}  // namespace ptheta
