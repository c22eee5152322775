#include "pcz/ball.hpp"

#include <cfloat>
#include <cmath>
#include <utility>

#include "pcz/errors.hpp"

namespace pcz {

namespace {
thread_local mpfr_prec_t g_prec = 128;

// Small RAII holder for scratch mpfr values.
struct Tmp {
  mpfr_t v;
  explicit Tmp(mpfr_prec_t p = 64) { mpfr_init2(v, p); }
  ~Tmp() { mpfr_clear(v); }
  Tmp(const Tmp&) = delete;
  Tmp& operator=(const Tmp&) = delete;
};

mpfr_prec_t pick(mpfr_prec_t p) { return p == 0 ? g_prec : p; }
}  // namespace

mpfr_prec_t default_precision() { return g_prec; }
void set_default_precision(mpfr_prec_t p) { g_prec = p < 53 ? 53 : p; }

// ---------------------------------------------------------------- Mag

void Mag::normalize() {
  if (m_ == 0.0) {
    e_ = 0;
    return;
  }
  int ex = 0;
  m_ = std::frexp(m_, &ex);
  e_ += ex;
}

Mag Mag::from_double(double v) {
  Mag r;
  r.m_ = std::fabs(v);
  r.e_ = 0;
  r.normalize();
  return r;
}

Mag Mag::from_mpfr(const mpfr_t x) {
  Mag r;
  if (mpfr_zero_p(x)) return r;
  if (!mpfr_number_p(x)) throw PrecisionLow("non-finite value in ball arithmetic");
  long ex = 0;
  double d = mpfr_get_d_2exp(&ex, x, mpfr_sgn(x) > 0 ? MPFR_RNDU : MPFR_RNDD);
  r.m_ = std::fabs(d);
  r.e_ = ex;
  r.normalize();
  return r;
}

Mag Mag::pow2(long e) {
  Mag r;
  r.m_ = 0.5;
  r.e_ = e + 1;
  return r;
}

double Mag::to_double() const {
  if (m_ == 0.0) return 0.0;
  if (e_ > 1020) return DBL_MAX;
  if (e_ < -1070) return 0.0;
  return std::ldexp(m_, static_cast<int>(e_));
}

void Mag::to_mpfr(mpfr_t out) const {
  mpfr_set_d(out, m_, MPFR_RNDU);
  mpfr_mul_2si(out, out, e_, MPFR_RNDU);
}

Mag operator+(const Mag& a, const Mag& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Mag& big = a.e_ >= b.e_ ? a : b;
  const Mag& small = a.e_ >= b.e_ ? b : a;
  long diff = big.e_ - small.e_;
  double add = diff > 900 ? 0x1p-900 : std::ldexp(small.m_, static_cast<int>(-diff));
  Mag r;
  r.m_ = std::nextafter(big.m_ + add, INFINITY);
  r.e_ = big.e_;
  r.normalize();
  return r;
}

Mag operator*(const Mag& a, const Mag& b) {
  Mag r;
  if (a.is_zero() || b.is_zero()) return r;
  r.m_ = std::nextafter(a.m_ * b.m_, INFINITY);
  r.e_ = a.e_ + b.e_;
  r.normalize();
  return r;
}

Mag Mag::mul_2exp(long k) const {
  Mag r = *this;
  if (!r.is_zero()) r.e_ += k;
  return r;
}

bool operator<(const Mag& a, const Mag& b) {
  if (a.is_zero()) return !b.is_zero();
  if (b.is_zero()) return false;
  if (a.e_ != b.e_) return a.e_ < b.e_;
  return a.m_ < b.m_;
}

double Mag::log2() const {
  if (m_ == 0.0) return -1e18;
  return std::log2(m_) + static_cast<double>(e_);
}

// ---------------------------------------------------------------- BallComplex

BallComplex::BallComplex(mpfr_prec_t prec) {
  prec = pick(prec);
  mpfr_init2(re_, prec);
  mpfr_init2(im_, prec);
  mpfr_set_zero(re_, 1);
  mpfr_set_zero(im_, 1);
}

BallComplex::BallComplex(const BallComplex& o) : rad_(o.rad_) {
  mpfr_init2(re_, o.prec());
  mpfr_init2(im_, o.prec());
  mpfr_set(re_, o.re_, MPFR_RNDN);
  mpfr_set(im_, o.im_, MPFR_RNDN);
}

BallComplex::BallComplex(BallComplex&& o) noexcept : rad_(o.rad_) {
  mpfr_init2(re_, MPFR_PREC_MIN);
  mpfr_init2(im_, MPFR_PREC_MIN);
  mpfr_swap(re_, o.re_);
  mpfr_swap(im_, o.im_);
}

BallComplex& BallComplex::operator=(const BallComplex& o) {
  if (this == &o) return *this;
  mpfr_set_prec(re_, o.prec());
  mpfr_set_prec(im_, o.prec());
  mpfr_set(re_, o.re_, MPFR_RNDN);
  mpfr_set(im_, o.im_, MPFR_RNDN);
  rad_ = o.rad_;
  return *this;
}

BallComplex& BallComplex::operator=(BallComplex&& o) noexcept {
  mpfr_swap(re_, o.re_);
  mpfr_swap(im_, o.im_);
  rad_ = o.rad_;
  return *this;
}

BallComplex::~BallComplex() {
  mpfr_clear(re_);
  mpfr_clear(im_);
}

void BallComplex::round_error_from(int t_re, int t_im) {
  long p = static_cast<long>(prec());
  if (t_re != 0) rad_ = rad_ + Mag::from_mpfr(re_).mul_2exp(-p + 1);
  if (t_im != 0) rad_ = rad_ + Mag::from_mpfr(im_).mul_2exp(-p + 1);
}

BallComplex BallComplex::from_rational(const Rational& q, mpfr_prec_t prec) {
  BallComplex r(prec);
  int t = mpfr_set_q(r.re_, q.raw().get_mpq_t(), MPFR_RNDN);
  r.round_error_from(t, 0);
  return r;
}

BallComplex BallComplex::from_gaussian(const Rational& re, const Rational& im, mpfr_prec_t prec) {
  BallComplex r(prec);
  int t1 = mpfr_set_q(r.re_, re.raw().get_mpq_t(), MPFR_RNDN);
  int t2 = mpfr_set_q(r.im_, im.raw().get_mpq_t(), MPFR_RNDN);
  r.round_error_from(t1, t2);
  return r;
}

BallComplex BallComplex::from_double(double re, double im, mpfr_prec_t prec) {
  BallComplex r(prec);
  mpfr_set_d(r.re_, re, MPFR_RNDN);
  mpfr_set_d(r.im_, im, MPFR_RNDN);
  return r;
}

BallComplex BallComplex::from_mpfr(const mpfr_t re, const mpfr_t im, mpfr_prec_t prec) {
  BallComplex r(prec);
  int t1 = mpfr_set(r.re_, re, MPFR_RNDN);
  int t2 = im ? mpfr_set(r.im_, im, MPFR_RNDN) : 0;
  r.round_error_from(t1, t2);
  return r;
}

BallComplex BallComplex::root_of_unity(long k, long n, mpfr_prec_t prec) {
  if (n <= 0) fail(ErrorCode::InvalidArgument, "root_of_unity: n must be positive");
  k %= n;
  if (k < 0) k += n;
  BallComplex r(prec);
  if ((4 * k) % n == 0) {
    long q = 4 * k / n;  // quarter turns
    static const int tab[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    mpfr_set_si(r.re_, tab[q][0], MPFR_RNDN);
    mpfr_set_si(r.im_, tab[q][1], MPFR_RNDN);
    return r;
  }
  mpfr_prec_t p = r.prec() + 16;
  Tmp ang(p);
  mpfr_const_pi(ang.v, MPFR_RNDN);
  mpfr_mul_si(ang.v, ang.v, 2 * k, MPFR_RNDN);
  mpfr_div_si(ang.v, ang.v, n, MPFR_RNDN);
  mpfr_sin_cos(r.im_, r.re_, ang.v, MPFR_RNDN);
  // angle error is a few ulps of a number below 2*pi; sin/cos are 1-Lipschitz
  r.rad_ = Mag::pow2(-static_cast<long>(r.prec()) + 5);
  return r;
}

BallComplex BallComplex::operator+(const BallComplex& o) const {
  BallComplex r(std::max(prec(), o.prec()));
  int t1 = mpfr_add(r.re_, re_, o.re_, MPFR_RNDN);
  int t2 = mpfr_add(r.im_, im_, o.im_, MPFR_RNDN);
  r.rad_ = rad_ + o.rad_;
  r.round_error_from(t1, t2);
  return r;
}

BallComplex BallComplex::operator-(const BallComplex& o) const {
  BallComplex r(std::max(prec(), o.prec()));
  int t1 = mpfr_sub(r.re_, re_, o.re_, MPFR_RNDN);
  int t2 = mpfr_sub(r.im_, im_, o.im_, MPFR_RNDN);
  r.rad_ = rad_ + o.rad_;
  r.round_error_from(t1, t2);
  return r;
}

BallComplex BallComplex::operator-() const {
  BallComplex r(*this);
  mpfr_neg(r.re_, r.re_, MPFR_RNDN);
  mpfr_neg(r.im_, r.im_, MPFR_RNDN);
  return r;
}

BallComplex BallComplex::conj() const {
  BallComplex r(*this);
  mpfr_neg(r.im_, r.im_, MPFR_RNDN);
  return r;
}

BallComplex BallComplex::operator*(const BallComplex& o) const {
  BallComplex r(std::max(prec(), o.prec()));
  int t1, t2;
  if (mpfr_zero_p(im_) && mpfr_zero_p(o.im_)) {
    t1 = mpfr_mul(r.re_, re_, o.re_, MPFR_RNDN);
    t2 = 0;
  } else {
    t1 = mpfr_fmms(r.re_, re_, o.re_, im_, o.im_, MPFR_RNDN);
    t2 = mpfr_fmma(r.im_, re_, o.im_, im_, o.re_, MPFR_RNDN);
  }
  if (!rad_.is_zero() || !o.rad_.is_zero()) {
    Mag a = Mag::from_mpfr(re_) + Mag::from_mpfr(im_);
    Mag b = Mag::from_mpfr(o.re_) + Mag::from_mpfr(o.im_);
    r.rad_ = a * o.rad_ + b * rad_ + rad_ * o.rad_;
  }
  r.round_error_from(t1, t2);
  return r;
}

BallComplex BallComplex::inv() const {
  Tmp h(64), low(64);
  mpfr_hypot(h.v, re_, im_, MPFR_RNDD);
  Tmp rr(64);
  rad_.to_mpfr(rr.v);
  mpfr_sub(low.v, h.v, rr.v, MPFR_RNDD);
  if (mpfr_sgn(low.v) <= 0) throw PrecisionLow("inverse of a ball that may contain zero");
  BallComplex r(prec());
  Tmp n(prec());
  mpfr_fmma(n.v, re_, re_, im_, im_, MPFR_RNDN);
  mpfr_div(r.re_, re_, n.v, MPFR_RNDN);
  mpfr_div(r.im_, im_, n.v, MPFR_RNDN);
  mpfr_neg(r.im_, r.im_, MPFR_RNDN);
  long p = static_cast<long>(prec());
  Mag roundoff = (Mag::from_mpfr(r.re_) + Mag::from_mpfr(r.im_)).mul_2exp(-p + 3);
  Mag spread;
  if (!rad_.is_zero()) {
    Tmp t(64);
    mpfr_div(t.v, rr.v, h.v, MPFR_RNDU);
    mpfr_div(t.v, t.v, low.v, MPFR_RNDU);
    spread = Mag::from_mpfr(t.v);
  }
  r.rad_ = roundoff + spread;
  return r;
}

BallComplex BallComplex::operator/(const BallComplex& o) const { return *this * o.inv(); }

BallComplex BallComplex::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  BallComplex result = from_rational(Rational(1), prec());
  BallComplex base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

BallComplex BallComplex::mul_2exp(long k) const {
  BallComplex r(*this);
  mpfr_mul_2si(r.re_, r.re_, k, MPFR_RNDN);
  mpfr_mul_2si(r.im_, r.im_, k, MPFR_RNDN);
  r.rad_ = rad_.mul_2exp(k);
  return r;
}

BallComplex BallComplex::scaled(const Rational& q) const {
  return *this * from_rational(q, prec());
}

bool BallComplex::contains_zero() const {
  Tmp h(64), rr(64);
  mpfr_hypot(h.v, re_, im_, MPFR_RNDD);
  rad_.to_mpfr(rr.v);
  return mpfr_cmp(h.v, rr.v) <= 0;
}

bool BallComplex::meets_real_axis() const {
  Tmp rr(64);
  rad_.to_mpfr(rr.v);
  return mpfr_cmpabs(im_, rr.v) <= 0;
}

bool BallComplex::overlaps(const BallComplex& o) const {
  mpfr_prec_t p = std::max(prec(), o.prec());
  Tmp dr(p), di(p), h(64), rr(64);
  mpfr_sub(dr.v, re_, o.re_, MPFR_RNDZ);
  mpfr_sub(di.v, im_, o.im_, MPFR_RNDZ);
  mpfr_hypot(h.v, dr.v, di.v, MPFR_RNDD);
  (rad_ + o.rad_).to_mpfr(rr.v);
  return mpfr_cmp(h.v, rr.v) <= 0;
}

Mag BallComplex::abs_upper() const {
  return Mag::from_mpfr(re_) + Mag::from_mpfr(im_) + rad_;
}

double BallComplex::abs_lower() const {
  Tmp h(64), rr(64);
  mpfr_hypot(h.v, re_, im_, MPFR_RNDD);
  rad_.to_mpfr(rr.v);
  mpfr_sub(h.v, h.v, rr.v, MPFR_RNDD);
  if (mpfr_sgn(h.v) <= 0) return 0.0;
  return mpfr_get_d(h.v, MPFR_RNDD);
}

double BallComplex::mid_abs() const {
  Tmp h(64);
  mpfr_hypot(h.v, re_, im_, MPFR_RNDN);
  return mpfr_get_d(h.v, MPFR_RNDN);
}

void BallComplex::project_real() { mpfr_set_zero(im_, 1); }

BallComplex BallComplex::mid() const {
  BallComplex r(*this);
  r.rad_ = Mag();
  return r;
}

BallComplex BallComplex::with_prec(mpfr_prec_t p) const {
  BallComplex r(p);
  int t1 = mpfr_set(r.re_, re_, MPFR_RNDN);
  int t2 = mpfr_set(r.im_, im_, MPFR_RNDN);
  r.rad_ = rad_;
  r.round_error_from(t1, t2);
  return r;
}

std::string BallComplex::str(int digits) const {
  char* a = nullptr;
  char* b = nullptr;
  mpfr_asprintf(&a, "%.*Rg", digits, re_);
  mpfr_asprintf(&b, "%.*Rg", digits, im_);
  std::string s = std::string("(") + a + (mpfr_sgn(im_) < 0 ? "" : "+") + b + "i +/- ";
  mpfr_free_str(a);
  mpfr_free_str(b);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g)", rad_.to_double());
  return s + buf;
}

}  // namespace pcz
