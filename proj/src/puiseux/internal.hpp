#pragma once

#include <vector>

#include "pcz/puiseux.hpp"

namespace pcz::detail {

struct RawBranch {
  Series y;  // in s, x = s^E
  int E = 1;
  bool real_chain = true;
};

// Every root y -> 0 of a square-free g with g(0,0) = 0 and x not dividing g,
// one representative per orbit, each known modulo x^P.
std::vector<RawBranch> factor_branches(const BivariatePolynomial& g, int P);

struct OrbitReality {
  Realness realness = Realness::Unresolved;
  int sigma = 1;
  Series param;
};

OrbitReality orbit_realness(const std::vector<RawBranch>& fb, std::size_t j);

}  // namespace pcz::detail
