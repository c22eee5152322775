#pragma once

#include <string>
#include <variant>

#include "pcz/ball.hpp"
#include "pcz/rational.hpp"

namespace pcz {

// A coefficient that stays an exact rational as long as possible and is
// promoted to a complex ball on first contact with one.
class Coeff {
 public:
  Coeff() : v_(Rational(0)) {}
  Coeff(long n) : v_(Rational(n)) {}  // NOLINT
  Coeff(const Rational& q) : v_(q) {}  // NOLINT
  Coeff(const BallComplex& b) : v_(b) {}  // NOLINT

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  const Rational& exact() const { return std::get<Rational>(v_); }
  const BallComplex& ball() const { return std::get<BallComplex>(v_); }
  BallComplex to_ball(mpfr_prec_t prec = 0) const;
  mpfr_prec_t prec() const { return is_exact() ? 0 : ball().prec(); }

  // Exact zero for rationals. For balls: true when the ball contains zero and
  // is tiny relative to its precision, false when it excludes zero, otherwise
  // PrecisionLow is thrown.
  bool is_zero() const;
  // Never throws; true only when certainly nonzero.
  bool certainly_nonzero() const;
  bool is_one() const { return is_exact() && exact().is_one(); }

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;
  Coeff operator-() const;
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
  Coeff inv() const;
  Coeff pow(long e) const;
  Coeff conj() const;

  double re_d() const;
  double im_d() const;
  std::string str() const;

 private:
  std::variant<Rational, BallComplex> v_;
};

}  // namespace pcz
