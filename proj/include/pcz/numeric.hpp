#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pcz/function.hpp"

namespace pcz {

struct BumpSpec {
  enum class Kind { IndicatorBox, SmoothBump };
  Kind kind = Kind::IndicatorBox;
  double R = 1.0;  // half-width of the box, radius of the bump

  static BumpSpec box(double R) { return {Kind::IndicatorBox, R}; }
  static BumpSpec smooth(double R) { return {Kind::SmoothBump, R}; }
  // exp(-1/(1 - r^2/R^2)) inside the disc for the smooth bump.
  double operator()(double x, double y) const;
  // |y| range of the support over a given x (empty when hi <= lo).
  std::pair<double, double> y_range(double x) const;
};

struct QuadConfig {
  double tol = 1e-8;          // relative, for early stopping
  int max_levels = 24;        // dyadic x-shells per side
  int max_pieces = 120;       // graded pieces toward each inner breakpoint
  double shrink = 0.9;        // increments must shrink by this factor across three levels
  long max_evals = 400000000;
};
// Looser shrink factor used when bisecting on the converged flag.
QuadConfig threshold_config();

struct QuadratureResult {
  double value = 0;
  double error = 0;
  int levels = 0;
  bool converged = false;
  std::vector<double> level_errors;  // tail estimate after each outer level
  long evals = 0;
};

double eval_integrand(const BivariateFunction& f, double x, double y);

QuadratureResult zeta_quadrature(const BivariateFunction& f, const BumpSpec& phi, double sigma,
                                 const QuadConfig& cfg = {});

struct ThresholdResult {
  double sigma_star = 0;
  double width = 0;
  int quadratures = 0;
  std::vector<std::pair<double, bool>> trail;  // (sigma, converged) in evaluation order
  std::vector<QuadratureResult> results;       // parallel to trail
};

// Bisection on the converged flag inside [lo, hi]; lo must diverge and hi converge.
ThresholdResult convergence_threshold(const BivariateFunction& f, const BumpSpec& phi, double lo, double hi,
                                      const QuadConfig& cfg = threshold_config(), double width = 0.01);

// Least-squares fit of value ~ A/(sigma - pole) + B over the converged rows.
struct PoleFit {
  double pole = 0, A = 0, B = 0;
  double rms_misfit = 0;  // relative
  int used = 0;
};
PoleFit simple_pole_fit(const std::vector<double>& sigma, const std::vector<QuadratureResult>& rows, double pole);

// (integral over [a,b] of |f|^sigma) / (eta^sigma |b-a|^(1+k sigma)).
double vdc_ratio(const std::function<double(double)>& f, int k, double eta, double a, double b, double sigma);

struct VdcRow {
  int i = 0;
  double length = 0;
  double r = 0;
};
// Ratios over [0, 2^-i], i = 0..levels.
std::vector<VdcRow> vdc_scaling(const std::function<double(double)>& f, int k, double eta, double sigma, int levels = 10);
double vdc_spread(const std::vector<VdcRow>& rows);  // max r / min r

struct DecompositionRow {
  double sigma = 0;
  QuadratureResult I1, I2, J;
  bool I2_checked = false, J_checked = false;
};

struct DecompositionReport {
  int a = 0, b = 0, m = 0, p = 0;
  double R = 0.5;
  double r_p = 0;
  double I2_edge = 0;   // -(p+b+1)/(mp+a)
  double I2_floor = 0;  // sigma above which I2 boundedness is asserted
  double J_floor = 0;   // sigma above which J boundedness is asserted
  double c = 0.5, mu = 0;
  double min_G1 = 0;
  double min_dmG2 = 0;
  std::vector<DecompositionRow> rows;
  std::vector<std::string> notes;
};

// G = x^a y^m + flats on [0,R]^2, weight x^b. Throws AssertionFailed on a violated bound.
DecompositionReport decomposition_check(int a, int b, int m, const std::vector<FlatTerm>& flats, int p,
                                        const std::vector<double>& sigmas, double margin = 0.02,
                                        const QuadConfig& cfg = threshold_config());

}  // namespace pcz
