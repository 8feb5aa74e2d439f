#include "ptheta/mpnum.hpp"

#include "ptheta/errors.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cmath>

namespace ptheta {

namespace {

mpfr_ptr raw(Real& x) { return x.backend().data(); }
mpfr_srcptr raw(const Real& x) { return x.backend().data(); }

bool valid_decimal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t mantissa_digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++mantissa_digits;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++mantissa_digits;
  }
  if (mantissa_digits == 0) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t exp_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++exp_digits;
    if (exp_digits == 0) return false;
  }
  return i == s.size();
}

std::string format_digits(bool negative, const std::string& digits, long exp10) {
  // value = 0.digits * 10^exp10
  std::string d = digits;
  while (d.size() > 1 && d.back() == '0') d.pop_back();
  std::string out = negative ? "-" : "";
  long point = exp10;  // digits before the decimal point
  if (point > 0 && point <= 21) {
    if (static_cast<long>(d.size()) <= point) {
      out += d + std::string(point - d.size(), '0');
    } else {
      out += d.substr(0, point) + "." + d.substr(point);
    }
  } else if (point <= 0 && point > -6) {
    out += "0." + std::string(-point, '0') + d;
  } else {
    out += d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    out += "e" + std::to_string(point - 1);
  }
  return out;
}

// boost starts at 20 digits; the library default is kDefaultDigits
const bool default_set = [] {
  Real::default_precision(kDefaultDigits);
  return true;
}();

}  // namespace

int working_digits() { return static_cast<int>(Real::default_precision()); }

PrecisionScope::PrecisionScope(int digits) : saved_(working_digits()) {
  if (digits < kMinDigits) throw DomainError("precision below 16 digits");
  Real::default_precision(static_cast<unsigned>(digits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(static_cast<unsigned>(saved_)); }

int digits_of(const Real& x) { return static_cast<int>(x.precision()); }

long bits_of(const Real& x) { return static_cast<long>(mpfr_get_prec(raw(x))); }

Real unit_roundoff(const Real& x) {
  Real u(1);
  mpfr_mul_2si(raw(u), raw(u), 1 - bits_of(x), MPFR_RNDN);
  return u;
}

Real next_above(const Real& x) {
  Real y = x;
  mpfr_nextabove(raw(y));
  return y;
}

Real next_below(const Real& x) {
  Real y = x;
  mpfr_nextbelow(raw(y));
  return y;
}

Real pi_at(int digits) {
  PrecisionScope scope(std::max(digits, kMinDigits));
  Real p;
  mpfr_const_pi(raw(p), MPFR_RNDN);
  return p;
}

Real parse_real(std::string_view text, int digits) {
  if (digits < kMinDigits) throw DomainError("precision below 16 digits");
  if (!valid_decimal(text)) throw ParseError("malformed decimal: '" + std::string(text) + "'");
  PrecisionScope scope(digits);
  Real x;
  std::string buf(text);
  if (mpfr_set_str(raw(x), buf.c_str(), 10, MPFR_RNDN) != 0)
    throw ParseError("malformed decimal: '" + buf + "'");
  return x;
}

std::string to_decimal(const Real& x) {
  if (!mpfr_number_p(raw(x)) || mpfr_zero_p(raw(x))) return to_decimal(x, 0);
  // shortest significand length that reads back to the identical binary value
  const long bits = bits_of(x);
  int lo = 1, hi = static_cast<int>(mpfr_get_str_ndigits(10, bits));
  Real back;
  mpfr_set_prec(raw(back), bits);
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(mid), raw(x), MPFR_RNDN);
    std::string digits(s);
    mpfr_free_str(s);
    std::string sci = digits[0] == '-' ? "-0." + digits.substr(1) : "0." + digits;
    sci += "e" + std::to_string(static_cast<long>(e));
    mpfr_set_str(raw(back), sci.c_str(), 10, MPFR_RNDN);
    if (mpfr_equal_p(raw(back), raw(x))) hi = mid;
    else lo = mid + 1;
  }
  return to_decimal(x, lo);
}

std::string to_decimal(const Real& x, int significant) {
  if (mpfr_nan_p(raw(x))) return "nan";
  if (mpfr_inf_p(raw(x))) return mpfr_sgn(raw(x)) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(raw(x))) return "0";
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(std::max(significant, 0)), raw(x),
                         MPFR_RNDN);
  std::string digits(s);
  mpfr_free_str(s);
  bool negative = false;
  if (!digits.empty() && digits[0] == '-') {
    negative = true;
    digits.erase(0, 1);
  }
  return format_digits(negative, digits, static_cast<long>(e));
}

MPComplex::MPComplex() : re_(0), im_(0) {}

MPComplex::MPComplex(Real re) : re_(std::move(re)), im_(0) { im_.precision(re_.precision()); }

MPComplex::MPComplex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

MPComplex MPComplex::from_double(double re, double im) { return MPComplex(Real(re), Real(im)); }

int MPComplex::precision() const { return std::max(digits_of(re_), digits_of(im_)); }

MPComplex& MPComplex::operator+=(const MPComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

MPComplex& MPComplex::operator-=(const MPComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

MPComplex& MPComplex::operator*=(const MPComplex& o) {
  Real r = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  return *this;
}

MPComplex& MPComplex::operator/=(const MPComplex& o) {
  Real d = o.re_ * o.re_ + o.im_ * o.im_;
  if (d == 0) throw DomainError("complex division by zero");
  Real r = (re_ * o.re_ + im_ * o.im_) / d;
  im_ = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(r);
  return *this;
}

MPComplex& MPComplex::operator*=(const Real& s) {
  re_ *= s;
  im_ *= s;
  return *this;
}

MPComplex& MPComplex::operator/=(const Real& s) {
  if (s == 0) throw DomainError("complex division by zero");
  re_ /= s;
  im_ /= s;
  return *this;
}

MPComplex mp(std::string_view re, std::string_view im, int precision) {
  return MPComplex(parse_real(re, precision), parse_real(im, precision));
}

Real abs(const MPComplex& z) { return boost::multiprecision::hypot(z.re(), z.im()); }

Real norm(const MPComplex& z) { return z.re() * z.re() + z.im() * z.im(); }

Real abs1(const MPComplex& z) { return boost::multiprecision::abs(z.re()) + boost::multiprecision::abs(z.im()); }

Real arg(const MPComplex& z) { return boost::multiprecision::atan2(z.im(), z.re()); }

MPComplex conj(const MPComplex& z) { return MPComplex(z.re(), -z.im()); }

MPComplex exp(const MPComplex& z) {
  Real m = boost::multiprecision::exp(z.re());
  return MPComplex(m * boost::multiprecision::cos(z.im()), m * boost::multiprecision::sin(z.im()));
}

MPComplex log(const MPComplex& z) {
  if (z.is_zero()) throw DomainError("log of zero");
  return MPComplex(boost::multiprecision::log(abs(z)), arg(z));
}

MPComplex sqrt(const MPComplex& z) {
  if (z.is_zero()) return z;
  Real r = abs(z);
  Real a = boost::multiprecision::sqrt((r + boost::multiprecision::abs(z.re())) / 2);
  if (z.re() >= 0) return MPComplex(a, z.im() / (2 * a));
  Real b = z.im() < 0 ? Real(-a) : a;
  return MPComplex(boost::multiprecision::abs(z.im()) / (2 * a), b);
}

MPComplex powi(MPComplex z, long n) {
  if (n < 0) {
    MPComplex one(Real(1), Real(0));
    return one / powi(std::move(z), -n);
  }
  MPComplex result(Real(1), Real(0));
  while (n > 0) {
    if (n & 1) result *= z;
    n >>= 1;
    if (n > 0) z *= z;
  }
  return result;
}

MPComplex powr(const MPComplex& z, const Real& a) {
  if (z.is_zero()) return z;
  return exp(log(z) * a);
}

MPComplex polar(const Real& r, const Real& theta) {
  return MPComplex(r * boost::multiprecision::cos(theta), r * boost::multiprecision::sin(theta));
}

Real with_digits(const Real& x, int digits) {
  PrecisionScope scope(digits);
  Real y;
  mpfr_set(raw(y), raw(x), MPFR_RNDN);
  return y;
}

MPComplex with_digits(const MPComplex& z, int digits) {
  PrecisionScope scope(digits);
  Real re, im;
  mpfr_set(raw(re), raw(z.re()), MPFR_RNDN);
  mpfr_set(raw(im), raw(z.im()), MPFR_RNDN);
  return MPComplex(std::move(re), std::move(im));
}

std::string to_string(const MPComplex& z, int significant) {
  std::string re = to_decimal(z.re(), significant);
  std::string im = to_decimal(z.im(), significant);
  if (im[0] == '-') return re + " - " + im.substr(1) + "i";
  return re + " + " + im + "i";
}

}  // namespace ptheta
