#pragma once

#include <string>
#include <vector>

#include "pcz/coeff.hpp"
#include "pcz/poly.hpp"

namespace pcz {

// Power series in t known modulo t^len.
class Series {
 public:
  Series() = default;
  explicit Series(int len) : c_(static_cast<std::size_t>(std::max(len, 0))) {}
  static Series constant(const Coeff& c, int len);
  static Series monomial(int k, const Coeff& c, int len);

  int len() const { return static_cast<int>(c_.size()); }
  const Coeff& operator[](int i) const { return c_[i]; }
  Coeff get(int i) const { return i < len() ? c_[i] : Coeff(); }
  Coeff& at(int i) { return c_[i]; }
  const std::vector<Coeff>& coeffs() const { return c_; }

  Series truncated(int len) const;
  // Zero-extends to len; only sound when the extra terms cannot matter.
  Series padded(int len) const;
  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series operator-() const;
  Series scaled(const Coeff& s) const;

  Series inv() const;  // constant term must be nonzero
  // Quotient when the divisor has valuation v and the dividend is divisible by t^v.
  Series div(const Series& o) const;
  // First index with a nonzero coefficient, or len() if none is detected.
  int valuation() const;
  Series shift_down(int k) const;  // divide by t^k
  Series shift_up(int k) const;    // multiply by t^k
  Series twisted(const Coeff& rho) const;  // t -> rho t
  Series ramified(int k) const;            // t -> t^k
  Series conj() const;
  Series derivative() const;
  // this(g(t)) for g with zero constant term.
  Series compose(const Series& g) const;
  // Compositional inverse of a series with c0 = 0 and c1 != 0.
  Series reversion() const;
  bool all_exact() const;
  std::string str(int max_terms = 8) const;

 private:
  std::vector<Coeff> c_;
};

// G(t, Y(t)) where x-powers of G are powers of t, truncated to len.
Series eval_y(const CPoly& G, const Series& Y, int len);

}  // namespace pcz
