#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>

namespace ptheta {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                          boost::multiprecision::et_off>;

inline constexpr int kDefaultDigits = 40;
inline constexpr int kMinDigits = 16;

// Precision used for freshly constructed values, in significant decimal digits.
int working_digits();

class PrecisionScope {
 public:
  explicit PrecisionScope(int digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  int saved_;
};

int digits_of(const Real& x);
long bits_of(const Real& x);
// 2^(1-p) for a p-bit mantissa.
Real unit_roundoff(const Real& x);
Real next_above(const Real& x);
Real next_below(const Real& x);
Real pi_at(int digits);

Real parse_real(std::string_view text, int digits);
// Shortest decimal that reads back to the same binary value.
std::string to_decimal(const Real& x);
std::string to_decimal(const Real& x, int significant);

class MPComplex {
 public:
  MPComplex();
  explicit MPComplex(Real re);
  MPComplex(Real re, Real im);
  static MPComplex from_double(double re, double im = 0.0);

  const Real& re() const noexcept { return re_; }
  const Real& im() const noexcept { return im_; }
  int precision() const;
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  MPComplex& operator+=(const MPComplex& o);
  MPComplex& operator-=(const MPComplex& o);
  MPComplex& operator*=(const MPComplex& o);
  MPComplex& operator/=(const MPComplex& o);
  MPComplex& operator*=(const Real& s);
  MPComplex& operator/=(const Real& s);
  MPComplex operator-() const { return MPComplex(-re_, -im_); }

  friend bool operator==(const MPComplex& a, const MPComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Real re_;
  Real im_;
};

inline MPComplex operator+(MPComplex a, const MPComplex& b) { return a += b; }
inline MPComplex operator-(MPComplex a, const MPComplex& b) { return a -= b; }
inline MPComplex operator*(MPComplex a, const MPComplex& b) { return a *= b; }
inline MPComplex operator/(MPComplex a, const MPComplex& b) { return a /= b; }
inline MPComplex operator*(MPComplex a, const Real& s) { return a *= s; }
inline MPComplex operator*(const Real& s, MPComplex a) { return a *= s; }
inline MPComplex operator/(MPComplex a, const Real& s) { return a /= s; }

// Parses a decimal pair; precision is in significant decimal digits (>= 16).
MPComplex mp(std::string_view re, std::string_view im, int precision = kDefaultDigits);

Real abs(const MPComplex& z);
Real norm(const MPComplex& z);
// max(|re|, |im|) <= |z| <= |re| + |im|; cheap bound used in error sums.
Real abs1(const MPComplex& z);
Real arg(const MPComplex& z);
MPComplex conj(const MPComplex& z);
MPComplex exp(const MPComplex& z);
MPComplex log(const MPComplex& z);
MPComplex sqrt(const MPComplex& z);
MPComplex powi(MPComplex z, long n);
// z^a for real a via the principal logarithm.
MPComplex powr(const MPComplex& z, const Real& a);
MPComplex polar(const Real& r, const Real& theta);
MPComplex with_digits(const MPComplex& z, int digits);
Real with_digits(const Real& x, int digits);

std::string to_string(const MPComplex& z, int significant = 0);

}  // namespace ptheta
