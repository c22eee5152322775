#pragma once

#include <mpfr.h>

#include <string>

#include "pcz/rational.hpp"

namespace pcz {

// Upper bound for a nonnegative real: m * 2^e with m in [0.5,1) or m == 0.
// All operations round upward so the bound stays rigorous at any precision.
class Mag {
 public:
  Mag() = default;
  static Mag from_double(double v);
  static Mag from_mpfr(const mpfr_t x);  // bound on |x|
  static Mag pow2(long e);

  bool is_zero() const { return m_ == 0.0; }
  double to_double() const;  // saturates at DBL_MAX / 0
  long exponent() const { return e_; }
  void to_mpfr(mpfr_t out) const;  // exact

  friend Mag operator+(const Mag& a, const Mag& b);
  friend Mag operator*(const Mag& a, const Mag& b);
  Mag mul_2exp(long k) const;
  friend bool operator<(const Mag& a, const Mag& b);
  friend bool operator<=(const Mag& a, const Mag& b) { return !(b < a); }
  // log2 upper estimate; very negative for zero.
  double log2() const;

 private:
  void normalize();
  double m_ = 0.0;
  long e_ = 0;
};

mpfr_prec_t default_precision();
void set_default_precision(mpfr_prec_t p);

// Scoped override of the default ball precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(mpfr_prec_t p) : saved_(default_precision()) { set_default_precision(p); }
  ~PrecisionScope() { set_default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

// Complex ball: midpoint re + i*im with an absolute error radius.
class BallComplex {
 public:
  explicit BallComplex(mpfr_prec_t prec = 0);
  BallComplex(const BallComplex& o);
  BallComplex(BallComplex&& o) noexcept;
  BallComplex& operator=(const BallComplex& o);
  BallComplex& operator=(BallComplex&& o) noexcept;
  ~BallComplex();

  static BallComplex from_rational(const Rational& q, mpfr_prec_t prec = 0);
  static BallComplex from_gaussian(const Rational& re, const Rational& im, mpfr_prec_t prec = 0);
  static BallComplex from_double(double re, double im = 0.0, mpfr_prec_t prec = 0);
  // Rounds to prec and records the rounding error; im may be null.
  static BallComplex from_mpfr(const mpfr_t re, const mpfr_t im, mpfr_prec_t prec = 0);
  // e^{2 pi i k / n}
  static BallComplex root_of_unity(long k, long n, mpfr_prec_t prec = 0);

  mpfr_prec_t prec() const { return mpfr_get_prec(re_); }
  const Mag& rad() const { return rad_; }
  const mpfr_t& re() const { return re_; }
  const mpfr_t& im() const { return im_; }
  double re_d() const { return mpfr_get_d(re_, MPFR_RNDN); }
  double im_d() const { return mpfr_get_d(im_, MPFR_RNDN); }

  BallComplex operator+(const BallComplex& o) const;
  BallComplex operator-(const BallComplex& o) const;
  BallComplex operator*(const BallComplex& o) const;
  BallComplex operator/(const BallComplex& o) const;
  BallComplex operator-() const;
  BallComplex& operator+=(const BallComplex& o) { return *this = *this + o; }
  BallComplex& operator-=(const BallComplex& o) { return *this = *this - o; }
  BallComplex& operator*=(const BallComplex& o) { return *this = *this * o; }
  BallComplex inv() const;  // throws PrecisionLow if the ball contains 0
  BallComplex pow(long e) const;
  BallComplex conj() const;
  BallComplex mul_2exp(long k) const;
  BallComplex scaled(const Rational& q) const;

  bool contains_zero() const;
  bool excludes_zero() const { return !contains_zero(); }
  // True when the ball meets the real axis (imaginary part may be zero).
  bool meets_real_axis() const;
  bool imag_excludes_zero() const { return !meets_real_axis(); }
  bool overlaps(const BallComplex& o) const;
  Mag abs_upper() const;
  double abs_lower() const;  // lower bound on |z| over the ball, as a double
  double mid_abs() const;

  // Drop the imaginary midpoint; sound when the enclosed value is known real.
  void project_real();
  // Replace the radius by zero (use only for approximate iterations).
  BallComplex mid() const;
  void add_error(const Mag& e) { rad_ = rad_ + e; }
  void set_radius(const Mag& r) { rad_ = r; }
  BallComplex with_prec(mpfr_prec_t p) const;

  std::string str(int digits = 17) const;

 private:
  void round_error_from(int t_re, int t_im);
  mpfr_t re_;
  mpfr_t im_;
  Mag rad_;
};

}  // namespace pcz
