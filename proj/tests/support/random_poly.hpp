#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pcz/function.hpp"

namespace testsupport {

struct Sample {
  pcz::BivariatePolynomial f;
  std::string label;
  std::optional<int> mu0;  // known by construction
};

class PolyGen {
 public:
  explicit PolyGen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  pcz::Rational small_rational(int span = 3) {
    int n = 0;
    while (n == 0) n = uniform(-span, span);
    return pcz::Rational(n, uniform(1, 3));
  }

  // 2..6 monomials of total degree 1..6 vanishing at the origin
  Sample sparse() {
    Sample s;
    int terms = uniform(2, 6);
    for (int i = 0; i < terms; ++i) {
      int d = uniform(1, 6), j = uniform(0, d);
      s.f.add_term(j, d - j, pcz::Rational(uniform(1, 5) * (uniform(0, 1) ? 1 : -1)));
    }
    if (s.f.is_zero()) s.f = pcz::BivariatePolynomial::x() * pcz::BivariatePolynomial::y();
    s.label = "sparse " + s.f.str();
    return s;
  }

  // Products of known factors; mu0 is the largest multiplicity of a real one.
  Sample product() {
    using P = pcz::BivariatePolynomial;
    P x = P::x(), y = P::y();
    Sample s;
    s.f = P(pcz::Rational(1));
    int budget = 6, best = 0;
    std::vector<pcz::Rational> slopes;
    int pieces = uniform(1, 3);
    for (int i = 0; i < pieces && budget > 0; ++i) {
      int kind = uniform(0, 5);
      P g;
      int deg = 1;
      bool real = true;
      switch (kind) {
        case 0: {
          pcz::Rational a = small_rational();
          bool fresh = true;
          for (auto& b : slopes) fresh = fresh && !(b == a);
          if (!fresh) continue;
          slopes.push_back(a);
          g = y - x.scaled(a);
          break;
        }
        case 1: g = x; deg = 1; break;
        case 2: g = y * y - x * x * x; deg = 3; break;
        case 3: g = x - (y * y).scaled(small_rational()); deg = 2; break;
        case 4: g = x * x + y * y; deg = 2; real = false; break;
        default: g = P(pcz::Rational(1)) + x; deg = 1; real = false; break;
      }
      if (kind == 1 && std::find(used_.begin(), used_.end(), 1) != used_.end()) continue;
      if (kind == 2 || kind == 4 || kind == 5) {
        if (std::find(used_.begin(), used_.end(), kind) != used_.end()) continue;
      }
      if (kind == 3) {
        if (std::find(used_.begin(), used_.end(), 3) != used_.end()) continue;
      }
      int maxm = budget / deg;
      if (maxm < 1) continue;
      int m = uniform(1, std::min(maxm, 4));
      budget -= m * deg;
      s.f = s.f * g.pow(m);
      used_.push_back(kind);
      if (real && kind != 5) best = std::max(best, m);
    }
    used_.clear();
    if (s.f.total_degree() == 0 || s.f.coeff(0, 0) != pcz::Rational(0)) {
      // make sure something passes through the origin
      s.f = s.f * y;
      best = std::max(best, 1);
    }
    s.mu0 = best;
    s.label = "product " + s.f.str();
    return s;
  }

  // f(ax+by, cx+dy) with a nonzero determinant
  std::array<pcz::Rational, 4> linear_change() {
    while (true) {
      std::array<pcz::Rational, 4> m;
      for (auto& c : m) c = pcz::Rational(uniform(-3, 3), uniform(1, 3));
      if (!(m[0] * m[3] - m[1] * m[2]).is_zero()) return m;
    }
  }

 private:
  std::mt19937_64 rng_;
  std::vector<int> used_;
};

}  // namespace testsupport
