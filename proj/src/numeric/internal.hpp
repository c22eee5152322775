#pragma once

#include <functional>
#include <vector>

#include "pcz/function.hpp"
#include "pcz/numeric.hpp"

namespace pcz::detail {

extern const double kGLNodes[8];
extern const double kGLWeights[8];

// Evaluation budget shared by one integration.
struct Budget {
  long used = 0;
  long cap = 0;
  void spend(long n);
};

// f(x, .) as a dense polynomial in y, flats folded into the coefficients.
class SliceEval {
 public:
  explicit SliceEval(const BivariateFunction& f);
  void set_x(double x);
  double operator()(double y) const {
    double s = 0;
    for (std::size_t k = cur_.size(); k-- > 0;) s = s * y + cur_[k];
    return s;
  }
  // Real parts of all roots of the current slice (polished).
  std::vector<double> root_real_parts() const;

 private:
  std::vector<std::vector<double>> poly_;  // poly_[k][j]: coefficient of x^j y^k
  std::vector<FlatTerm> flats_;
  std::vector<double> cur_;
};

struct GradeOptions {
  double shrink = 0.9;
  double tol = 1e-8;
  int max_pieces = 120;
  int stable_converge = 12;  // stop on stable ratios below shrink from this piece on
  int stable_diverge = 40;   // give up on stable ratios at or above shrink from this piece on
};

struct SideResult {
  double value = 0;
  double error = 0;
  int pieces = 0;
  bool converged = true;
  std::vector<double> trail;  // running tail estimate per piece
};

// Integral of g over the segment from e to e + dir*L, with dyadic pieces
// shrinking toward e. piece(k) returns the integral over piece k.
SideResult graded(const std::function<double(int)>& piece, const GradeOptions& opt, double e, double L);

// Integral of g over [lo, hi] on one GL8 panel.
double gl8(const std::function<double(double)>& g, double lo, double hi, Budget& budget);

struct Region {
  // x = x0 + dir * t for t in (0, L], graded toward t = 0
  double x0 = 0, dir = 1, L = 1;
  std::function<std::pair<double, double>(double)> ylim;
  std::function<double(double, double)> weight;  // multiplies |f|^sigma
};

QuadratureResult integrate_region(const BivariateFunction& f, double sigma, const Region& reg, const QuadConfig& cfg,
                                  Budget& budget);

}  // namespace pcz::detail
