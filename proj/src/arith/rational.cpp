#include "pcz/rational.hpp"

#include <cctype>
#include <functional>
#include <numeric>

#include "pcz/errors.hpp"

namespace pcz {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::FlatInput: return "FlatInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::TruncationUnderflow: return "TruncationUnderflow";
    case ErrorCode::NonCompactFace: return "NonCompactFace";
    case ErrorCode::IterationLimit: return "IterationLimit";
    case ErrorCode::UnresolvedRealness: return "UnresolvedRealness";
    case ErrorCode::NonRealCenter: return "NonRealCenter";
    case ErrorCode::SingularSample: return "SingularSample";
    case ErrorCode::AssertionFailed: return "AssertionFailed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational::Rational(long n, long d) {
  if (d == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

static bool valid_int(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

static std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Rational Rational::parse(std::string_view s) {
  s = trim(s);
  auto slash = s.find('/');
  std::string_view a = trim(s.substr(0, slash));
  std::string_view b = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!valid_int(a) || !valid_int(b) || b.front() == '-' || b.front() == '+')
    fail(ErrorCode::ParseError, "malformed rational '" + std::string(s) + "'");
  std::string as(a), bs(b);
  if (as.front() == '+') as.erase(0, 1);
  mpz_class n(as), d(bs);
  if (d == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(s) + "'");
  return Rational(n, d);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::inv() const {
  if (is_zero()) fail(ErrorCode::InvalidArgument, "inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::size_t Rational::hash() const {
  std::hash<std::string> h;
  return h(str());
}

Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

long gcd_l(long a, long b) { return std::gcd(a, b); }
long lcm_l(long a, long b) { return std::lcm(a, b); }

}  // namespace pcz
