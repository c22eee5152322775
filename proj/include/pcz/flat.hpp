#pragma once

#include <string>
#include <vector>

#include "pcz/rational.hpp"

namespace pcz {

// c * x^x_power * y^y_power * exp(-w / |x|^p). Products of terms with the
// same p add their weights w, so a single term stays closed under powers.
struct FlatTerm {
  Rational c;
  int x_power = 0;
  int y_power = 0;
  int p = 1;
  int w = 1;

  double eval(double x, double y) const;
  // log|value| (or -inf when the value is 0); useful for flatness checks.
  double log_abs(double x, double y) const;
  bool same_shape(const FlatTerm& o) const {
    return x_power == o.x_power && y_power == o.y_power && p == o.p && w == o.w;
  }
  std::string str() const;
};

// A finite sum of flat terms with like terms merged.
class FlatSum {
 public:
  FlatSum() = default;
  explicit FlatSum(std::vector<FlatTerm> t);

  void add(const FlatTerm& t);
  const std::vector<FlatTerm>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  FlatSum operator+(const FlatSum& o) const;
  FlatSum operator-(const FlatSum& o) const;
  FlatSum operator*(const FlatSum& o) const;  // mixed p values are kept as separate factors only when equal
  FlatSum scaled(const Rational& s) const;
  FlatSum pow(int n) const;
  // Multiply by x^k (k may be negative).
  FlatSum shifted_x(int k) const;

  double eval(double x, double y) const;
  std::string str() const;

 private:
  std::vector<FlatTerm> t_;
};

// Sum over tails of tail^alpha.
FlatSum flat_power_sums(const std::vector<FlatSum>& tails, int alpha);
// e_1..e_n of the tails, from their power sums by Newton's identities.
std::vector<FlatSum> flat_elementary_symmetric(const std::vector<FlatSum>& tails);

}  // namespace pcz
