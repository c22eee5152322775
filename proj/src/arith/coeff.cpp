#include "pcz/coeff.hpp"

#include "pcz/errors.hpp"

namespace pcz {

namespace {
mpfr_prec_t join(const Coeff& a, const Coeff& b) {
  mpfr_prec_t p = std::max(a.prec(), b.prec());
  return p == 0 ? default_precision() : p;
}
}  // namespace

BallComplex Coeff::to_ball(mpfr_prec_t prec) const {
  if (is_exact()) return BallComplex::from_rational(exact(), prec);
  if (prec == 0 || prec == ball().prec()) return ball();
  return ball().with_prec(prec);
}

bool Coeff::is_zero() const {
  if (is_exact()) return exact().is_zero();
  const BallComplex& b = ball();
  if (b.excludes_zero()) return false;
  long p = static_cast<long>(b.prec());
  if (b.abs_upper() < Mag::pow2(-(3 * p) / 8)) return true;
  throw PrecisionLow("zero test undecided");
}

bool Coeff::certainly_nonzero() const {
  if (is_exact()) return !exact().is_zero();
  return ball().excludes_zero();
}

Coeff Coeff::operator+(const Coeff& o) const {
  if (is_exact() && o.is_exact()) return Coeff(exact() + o.exact());
  if (is_exact() && exact().is_zero()) return o;
  if (o.is_exact() && o.exact().is_zero()) return *this;
  mpfr_prec_t p = join(*this, o);
  return Coeff(to_ball(p) + o.to_ball(p));
}

Coeff Coeff::operator-(const Coeff& o) const {
  if (is_exact() && o.is_exact()) return Coeff(exact() - o.exact());
  if (o.is_exact() && o.exact().is_zero()) return *this;
  mpfr_prec_t p = join(*this, o);
  return Coeff(to_ball(p) - o.to_ball(p));
}

Coeff Coeff::operator*(const Coeff& o) const {
  if (is_exact() && o.is_exact()) return Coeff(exact() * o.exact());
  if ((is_exact() && exact().is_zero()) || (o.is_exact() && o.exact().is_zero())) return Coeff();
  if (is_exact() && exact().is_one()) return o;
  if (o.is_exact() && o.exact().is_one()) return *this;
  mpfr_prec_t p = join(*this, o);
  return Coeff(to_ball(p) * o.to_ball(p));
}

Coeff Coeff::inv() const {
  if (is_exact()) return Coeff(exact().inv());
  return Coeff(ball().inv());
}

Coeff Coeff::operator/(const Coeff& o) const {
  if (is_exact() && o.is_exact()) return Coeff(exact() / o.exact());
  return *this * o.inv();
}

Coeff Coeff::operator-() const {
  if (is_exact()) return Coeff(-exact());
  return Coeff(-ball());
}

Coeff Coeff::pow(long e) const {
  if (is_exact()) return Coeff(exact().pow(static_cast<int>(e)));
  return Coeff(ball().pow(e));
}

Coeff Coeff::conj() const {
  if (is_exact()) return *this;
  return Coeff(ball().conj());
}

double Coeff::re_d() const { return is_exact() ? exact().to_double() : ball().re_d(); }
double Coeff::im_d() const { return is_exact() ? 0.0 : ball().im_d(); }

std::string Coeff::str() const { return is_exact() ? exact().str() : ball().str(); }

}  // namespace pcz
