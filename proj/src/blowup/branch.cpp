#include <cmath>

#include "internal.hpp"
#include "pcz/errors.hpp"

namespace pcz {

namespace detail {

bool same_coeff(const Coeff& a, const Coeff& b) { return (a - b).is_zero(); }

bool imag_is_zero(const Coeff& c) {
  if (c.is_exact()) return true;
  const BallComplex& b = c.ball();
  if (b.imag_excludes_zero()) return false;
  double bound = std::fabs(b.im_d()) + b.rad().to_double();
  if (bound < std::ldexp(1.0, -static_cast<int>(3 * b.prec() / 8))) return true;
  throw PrecisionLow("cannot decide whether a coefficient is real");
}

Coeff real_part(const Coeff& c) {
  if (c.is_exact()) return c;
  BallComplex b = c.ball();
  b.project_real();
  return Coeff(b);
}

Series centered(const Series& s, const Coeff& at) {
  if (s.len() == 0) fail(ErrorCode::TruncationUnderflow, "branch series exhausted");
  Series r = s;
  if (!same_coeff(s[0], at)) fail(ErrorCode::AssertionFailed, "branch does not pass through the center");
  r.at(0) = Coeff();
  return r;
}

}  // namespace detail

std::string ContactValue::str() const {
  switch (kind) {
    case Zero: return "ZERO";
    case Finite: return std::to_string(value);
    case Infinity: return "INFINITY(up to " + std::to_string(truncation) + ")";
  }
  return "?";
}

BranchState strict_transform(const BranchState& b, bool meeting) {
  if (!meeting) return b;
  if (b.phi.len() < 2) fail(ErrorCode::TruncationUnderflow, "branch " + std::to_string(b.id) + " has no coefficients left");
  BranchState r = b;
  r.phi.at(0) = Coeff();
  r.phi = r.phi.shift_down(1);
  r.m_count += 1;
  r.flat_offset -= 1;
  return r;
}

namespace {

ContactValue series_contact(const Series& a, const Series& b) {
  int n = std::min(a.len(), b.len());
  ContactValue c;
  for (int i = 0; i < n; ++i) {
    if (!(a[i] - b[i]).is_zero()) {
      if (i == 0) {
        c.kind = ContactValue::Zero;
      } else {
        c.kind = ContactValue::Finite;
        c.value = i;
      }
      return c;
    }
  }
  c.kind = ContactValue::Infinity;
  c.truncation = n;
  return c;
}

}  // namespace

ContactValue contact_exponent(const BranchState& a, const BranchState& b) {
  if (a.home != b.home) return {};
  return series_contact(a.phi, b.phi);
}

ContactValue contact_exponent(const ResolutionTree& tree, int b1, int b2) {
  const ResBranch& a = tree.branches.at(b1);
  const ResBranch& b = tree.branches.at(b2);
  if (!a.graph || !b.graph) fail(ErrorCode::InvalidArgument, "contact exponent needs graph branches");
  if (a.chart != b.chart || a.detached || b.detached) return {};
  return series_contact(a.Y, b.Y);
}

}  // namespace pcz
