#pragma once

#include <optional>
#include <string>

#include "pcz/errors.hpp"
#include "pcz/json_io.hpp"

namespace pcz {

struct ProbeOptions {
  std::string mode = "quadrature";  // quadrature | threshold | vdc | decomposition
  std::optional<double> sigma_min, sigma_max;
  int steps = 0;  // 0 picks a per-mode default
  double tol = 0.01;
  double radius = 1.0;
  bool smooth_bump = false;
  int b = 0, p = 4;                // decomposition
  std::optional<int> k;            // vdc derivative order
  std::optional<double> eta;       // vdc lower bound
  int levels = 10;                 // vdc dyadic levels
};

// A command either throws Error or returns its output. Outputs that are
// still worth printing on failure (resolution with a failed check, a probe
// cut short by the budget) carry the error instead.
struct CommandResult {
  json out;
  std::string csv;
  std::string dot;
  std::optional<ErrorCode> error;
  std::string message;
};

CommandResult cmd_invariants(const BivariateFunction& f);
CommandResult cmd_resolve(const BivariateFunction& f, int trunc);
CommandResult cmd_poles(const BivariateFunction& f, int trunc);
CommandResult cmd_probe(const BivariateFunction& f, const ProbeOptions& opt);
CommandResult cmd_vdc(const BivariateFunction& f, const ProbeOptions& opt);

// Process exit code for an error: 2 parse/flat input, 3 verification,
// 4 precision, 5 budget, 1 anything else.
int exit_code_for(ErrorCode c);

}  // namespace pcz
