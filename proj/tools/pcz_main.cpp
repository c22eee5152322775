#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pcz.h"

namespace {

struct Args {
  std::string input = "-";
  std::string output;
  std::string dot;
  std::string summary;
  int trunc = 64;
  double sigma_min = 0, sigma_max = 0;
  int steps = 0;
  double tol = 0.01;
  std::string mode = "quadrature";
  double radius = 1.0;
  bool smooth = false;
  int b = 0, p = 4, k = 0, levels = 10;
  double eta = 0;
};

bool read_all(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path);
  if (!in) return false;
  text.assign(std::istreambuf_iterator<char>(in), {});
  return true;
}

bool write_to(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(path);
  out << text;
  return static_cast<bool>(out);
}

int report(pcz_status st) {
  std::cerr << "error: " << pcz_status_name(st) << ": " << pcz_last_error() << "\n";
  return pcz_exit_code(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane-curve singularity invariants, almost resolution, zeta pole sets and numeric probes"};
  app.require_subcommand(1);
  Args a;
  pcz_probe_options po;
  pcz_probe_options_init(&po);

  auto common = [&](CLI::App* sub) {
    sub->add_option("input", a.input, "function spec JSON (default: stdin)");
    sub->add_option("-o,--output", a.output, "write the JSON result here instead of stdout");
  };
  auto numeric = [&](CLI::App* sub) {
    sub->add_option("--sigma-min", a.sigma_min, "lower end of the sigma range");
    sub->add_option("--sigma-max", a.sigma_max, "upper end of the sigma range");
    sub->add_option("--steps", a.steps, "grid points");
    sub->add_option("--summary", a.summary, "write the JSON summary here (default: stderr)");
  };

  auto* inv = app.add_subcommand("invariants", "Newton polygon, d, delta0, mu0");
  common(inv);
  auto* res = app.add_subcommand("resolve", "almost resolution with verification");
  common(res);
  res->add_option("--trunc", a.trunc, "series truncation order")->default_val(64);
  res->add_option("--dot", a.dot, "write the divisor graph as DOT");
  auto* pol = app.add_subcommand("poles", "meromorphic extension region and candidate poles");
  common(pol);
  pol->add_option("--trunc", a.trunc, "series truncation order")->default_val(64);
  auto* prb = app.add_subcommand("probe", "numeric probes of the local zeta function");
  common(prb);
  numeric(prb);
  prb->add_option("--mode", a.mode, "quadrature | threshold | vdc | decomposition")
      ->check(CLI::IsMember({"quadrature", "threshold", "vdc", "decomposition"}));
  prb->add_option("--tol", a.tol, "bisection width for threshold mode");
  prb->add_option("--radius", a.radius, "bump half-width");
  prb->add_flag("--smooth", a.smooth, "smooth bump instead of the indicator box");
  prb->add_option("--b", a.b, "x-weight exponent (decomposition)");
  prb->add_option("--p", a.p, "even region exponent (decomposition)");
  prb->add_option("--k", a.k, "derivative order (vdc)");
  prb->add_option("--eta", a.eta, "derivative lower bound (vdc)");
  auto* vdc = app.add_subcommand("vdc", "van der Corput scaling of f(t,0) over [0,2^-i]");
  common(vdc);
  numeric(vdc);
  vdc->add_option("--k", a.k, "derivative order");
  vdc->add_option("--eta", a.eta, "derivative lower bound");
  vdc->add_option("--levels", a.levels, "dyadic levels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("PCZ_PRECISION")) {
    char* end = nullptr;
    long bits = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || pcz_set_precision(bits) != PCZ_OK) {
      std::cerr << "error: PCZ_PRECISION must be an integer bit count in [16, 65536]\n";
      return 1;
    }
  } else {
    pcz_set_precision(128);
  }

  std::string text;
  if (!read_all(a.input, text)) {
    std::cerr << "error: cannot read " << a.input << "\n";
    return 2;
  }
  pcz_function* f = nullptr;
  pcz_status st = pcz_function_parse(text.c_str(), &f);
  if (st != PCZ_OK) return report(st);

  CLI::App* cmd = app.get_subcommands().front();
  std::string name = cmd->get_name();
  pcz_output* out = nullptr;
  if (name == "invariants") {
    st = pcz_invariants(f, &out);
  } else if (name == "resolve") {
    st = pcz_resolve(f, a.trunc, &out);
  } else if (name == "poles") {
    st = pcz_poles(f, a.trunc, &out);
  } else {
    po.mode = name == "vdc" ? "vdc" : a.mode.c_str();
    po.has_sigma_min = cmd->count("--sigma-min") > 0;
    po.has_sigma_max = cmd->count("--sigma-max") > 0;
    po.sigma_min = a.sigma_min;
    po.sigma_max = a.sigma_max;
    po.steps = a.steps;
    po.tol = a.tol;
    po.radius = a.radius;
    po.smooth_bump = a.smooth;
    po.b = a.b;
    po.p = a.p;
    po.k = a.k;
    po.eta = a.eta;
    po.levels = a.levels;
    st = name == "vdc" ? pcz_vdc(f, &po, &out) : pcz_probe(f, &po, &out);
  }

  int rc = 0;
  if (out) {
    bool tabular = name == "probe" || name == "vdc";
    if (tabular) {
      write_to(a.output, pcz_output_csv(out));
      std::string summary = std::string(pcz_output_json(out)) + "\n";
      if (a.summary.empty())
        std::cerr << summary;
      else if (!write_to(a.summary, summary))
        std::cerr << "error: cannot write " << a.summary << "\n", rc = 1;
    } else if (!write_to(a.output, std::string(pcz_output_json(out)) + "\n")) {
      std::cerr << "error: cannot write " << a.output << "\n";
      rc = 1;
    }
    if (!a.dot.empty() && !write_to(a.dot, pcz_output_dot(out))) {
      std::cerr << "error: cannot write " << a.dot << "\n";
      rc = 1;
    }
  }
  if (st != PCZ_OK) rc = report(st);
  pcz_output_free(out);
  pcz_function_free(f);
  return rc;
}
