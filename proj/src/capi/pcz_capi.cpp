#include "pcz.h"

#include <string>

#include "pcz/ball.hpp"
#include "pcz/commands.hpp"

struct pcz_function {
  pcz::BivariateFunction f;
};

struct pcz_output {
  std::string json, csv, dot;
};

namespace {

thread_local std::string g_last_error;

pcz_status status_of(pcz::ErrorCode c) {
  using pcz::ErrorCode;
  switch (c) {
    case ErrorCode::FlatInput: return PCZ_FLAT_INPUT;
    case ErrorCode::ParseError: return PCZ_PARSE_ERROR;
    case ErrorCode::VerificationFailed: return PCZ_VERIFICATION_FAILED;
    case ErrorCode::PrecisionExhausted: return PCZ_PRECISION_EXHAUSTED;
    case ErrorCode::BudgetExceeded: return PCZ_BUDGET_EXCEEDED;
    case ErrorCode::TruncationUnderflow: return PCZ_TRUNCATION_UNDERFLOW;
    case ErrorCode::NonCompactFace: return PCZ_NON_COMPACT_FACE;
    case ErrorCode::IterationLimit: return PCZ_ITERATION_LIMIT;
    case ErrorCode::UnresolvedRealness: return PCZ_UNRESOLVED_REALNESS;
    case ErrorCode::NonRealCenter: return PCZ_NON_REAL_CENTER;
    case ErrorCode::SingularSample: return PCZ_SINGULAR_SAMPLE;
    case ErrorCode::AssertionFailed: return PCZ_ASSERTION_FAILED;
    case ErrorCode::InvalidArgument: return PCZ_INVALID_ARGUMENT;
  }
  return PCZ_INTERNAL;
}

template <class F>
pcz_status guarded(pcz_output** out, F&& body) {
  if (out) *out = nullptr;
  g_last_error.clear();
  try {
    pcz::CommandResult r = body();
    if (out) *out = new pcz_output{r.out.dump(2), r.csv, r.dot};
    if (r.error) {
      g_last_error = r.message;
      return status_of(*r.error);
    }
    return PCZ_OK;
  } catch (const pcz::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PCZ_INTERNAL;
  }
}

pcz::ProbeOptions options_of(const pcz_probe_options* o) {
  pcz::ProbeOptions p;
  if (!o) return p;
  if (o->mode) p.mode = o->mode;
  if (o->has_sigma_min) p.sigma_min = o->sigma_min;
  if (o->has_sigma_max) p.sigma_max = o->sigma_max;
  p.steps = o->steps;
  p.tol = o->tol;
  p.radius = o->radius;
  p.smooth_bump = o->smooth_bump != 0;
  p.b = o->b;
  p.p = o->p;
  if (o->k > 0) p.k = o->k;
  if (o->eta > 0) p.eta = o->eta;
  p.levels = o->levels;
  return p;
}

pcz_status missing(const char* what) {
  g_last_error = std::string("null ") + what;
  return PCZ_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

void pcz_probe_options_init(pcz_probe_options* o) {
  if (!o) return;
  pcz::ProbeOptions d;
  *o = pcz_probe_options{};
  o->mode = "quadrature";
  o->steps = d.steps;
  o->tol = d.tol;
  o->radius = d.radius;
  o->b = d.b;
  o->p = d.p;
  o->levels = d.levels;
}

pcz_status pcz_function_parse(const char* json, pcz_function** out) {
  if (!out) return missing("output pointer");
  *out = nullptr;
  if (!json) return missing("input");
  g_last_error.clear();
  try {
    *out = new pcz_function{pcz::parse_function_spec(std::string(json))};
    return PCZ_OK;
  } catch (const pcz::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PCZ_PARSE_ERROR;
  }
}

void pcz_function_free(pcz_function* f) { delete f; }

const char* pcz_function_name(const pcz_function* f) { return f ? f->f.name.c_str() : ""; }

pcz_status pcz_invariants(const pcz_function* f, pcz_output** out) {
  if (!f) return missing("function");
  return guarded(out, [&] { return pcz::cmd_invariants(f->f); });
}

pcz_status pcz_resolve(const pcz_function* f, int trunc, pcz_output** out) {
  if (!f) return missing("function");
  return guarded(out, [&] { return pcz::cmd_resolve(f->f, trunc); });
}

pcz_status pcz_poles(const pcz_function* f, int trunc, pcz_output** out) {
  if (!f) return missing("function");
  return guarded(out, [&] { return pcz::cmd_poles(f->f, trunc); });
}

pcz_status pcz_probe(const pcz_function* f, const pcz_probe_options* o, pcz_output** out) {
  if (!f) return missing("function");
  return guarded(out, [&] { return pcz::cmd_probe(f->f, options_of(o)); });
}

pcz_status pcz_vdc(const pcz_function* f, const pcz_probe_options* o, pcz_output** out) {
  if (!f) return missing("function");
  return guarded(out, [&] { return pcz::cmd_vdc(f->f, options_of(o)); });
}

const char* pcz_output_json(const pcz_output* o) { return o ? o->json.c_str() : ""; }
const char* pcz_output_csv(const pcz_output* o) { return o ? o->csv.c_str() : ""; }
const char* pcz_output_dot(const pcz_output* o) { return o ? o->dot.c_str() : ""; }
void pcz_output_free(pcz_output* o) { delete o; }

const char* pcz_last_error(void) { return g_last_error.c_str(); }

const char* pcz_status_name(pcz_status s) {
  switch (s) {
    case PCZ_OK: return "Ok";
    case PCZ_FLAT_INPUT: return "FlatInput";
    case PCZ_PARSE_ERROR: return "ParseError";
    case PCZ_VERIFICATION_FAILED: return "VerificationFailed";
    case PCZ_PRECISION_EXHAUSTED: return "PrecisionExhausted";
    case PCZ_BUDGET_EXCEEDED: return "BudgetExceeded";
    case PCZ_TRUNCATION_UNDERFLOW: return "TruncationUnderflow";
    case PCZ_NON_COMPACT_FACE: return "NonCompactFace";
    case PCZ_ITERATION_LIMIT: return "IterationLimit";
    case PCZ_UNRESOLVED_REALNESS: return "UnresolvedRealness";
    case PCZ_NON_REAL_CENTER: return "NonRealCenter";
    case PCZ_SINGULAR_SAMPLE: return "SingularSample";
    case PCZ_ASSERTION_FAILED: return "AssertionFailed";
    case PCZ_INVALID_ARGUMENT: return "InvalidArgument";
    case PCZ_INTERNAL: return "Internal";
  }
  return "Unknown";
}

int pcz_exit_code(pcz_status s) {
  switch (s) {
    case PCZ_OK: return 0;
    case PCZ_FLAT_INPUT: return pcz::exit_code_for(pcz::ErrorCode::FlatInput);
    case PCZ_PARSE_ERROR: return pcz::exit_code_for(pcz::ErrorCode::ParseError);
    case PCZ_VERIFICATION_FAILED: return pcz::exit_code_for(pcz::ErrorCode::VerificationFailed);
    case PCZ_PRECISION_EXHAUSTED: return pcz::exit_code_for(pcz::ErrorCode::PrecisionExhausted);
    case PCZ_BUDGET_EXCEEDED: return pcz::exit_code_for(pcz::ErrorCode::BudgetExceeded);
    case PCZ_TRUNCATION_UNDERFLOW: return pcz::exit_code_for(pcz::ErrorCode::TruncationUnderflow);
    case PCZ_ITERATION_LIMIT: return pcz::exit_code_for(pcz::ErrorCode::IterationLimit);
    case PCZ_UNRESOLVED_REALNESS: return pcz::exit_code_for(pcz::ErrorCode::UnresolvedRealness);
    case PCZ_ASSERTION_FAILED: return pcz::exit_code_for(pcz::ErrorCode::AssertionFailed);
    default: return 1;
  }
}

pcz_status pcz_set_precision(long bits) {
  if (bits < 16 || bits > 1 << 16) {
    g_last_error = "precision must lie in [16, 65536] bits";
    return PCZ_INVALID_ARGUMENT;
  }
  pcz::set_default_precision(static_cast<mpfr_prec_t>(bits));
  return PCZ_OK;
}

long pcz_get_precision(void) { return static_cast<long>(pcz::default_precision()); }

}  // extern "C"
