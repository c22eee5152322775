#ifndef PCZ_H
#define PCZ_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define PCZ_API __declspec(dllexport)
#else
#define PCZ_API __attribute__((visibility("default")))
#endif

typedef struct pcz_function pcz_function;
typedef struct pcz_output pcz_output;

typedef enum pcz_status {
  PCZ_OK = 0,
  PCZ_FLAT_INPUT,
  PCZ_PARSE_ERROR,
  PCZ_VERIFICATION_FAILED,
  PCZ_PRECISION_EXHAUSTED,
  PCZ_BUDGET_EXCEEDED,
  PCZ_TRUNCATION_UNDERFLOW,
  PCZ_NON_COMPACT_FACE,
  PCZ_ITERATION_LIMIT,
  PCZ_UNRESOLVED_REALNESS,
  PCZ_NON_REAL_CENTER,
  PCZ_SINGULAR_SAMPLE,
  PCZ_ASSERTION_FAILED,
  PCZ_INVALID_ARGUMENT,
  PCZ_INTERNAL
} pcz_status;

typedef struct pcz_probe_options {
  const char* mode; /* quadrature | threshold | vdc | decomposition */
  int has_sigma_min, has_sigma_max;
  double sigma_min, sigma_max;
  int steps; /* 0: per-mode default */
  double tol;
  double radius;
  int smooth_bump;
  int b, p;
  int k; /* 0: derive from f(t,0) */
  double eta; /* <= 0: derive */
  int levels;
} pcz_probe_options;

PCZ_API void pcz_probe_options_init(pcz_probe_options* o);

/* Parses a JSON function spec. On failure *out is NULL. */
PCZ_API pcz_status pcz_function_parse(const char* json, pcz_function** out);
PCZ_API void pcz_function_free(pcz_function* f);
PCZ_API const char* pcz_function_name(const pcz_function* f);

/* Each command sets *out whenever there is something to show, which can
   happen together with a failing status (a failed verification, a probe
   stopped by its budget). Free with pcz_output_free. */
PCZ_API pcz_status pcz_invariants(const pcz_function* f, pcz_output** out);
PCZ_API pcz_status pcz_resolve(const pcz_function* f, int trunc, pcz_output** out);
PCZ_API pcz_status pcz_poles(const pcz_function* f, int trunc, pcz_output** out);
PCZ_API pcz_status pcz_probe(const pcz_function* f, const pcz_probe_options* o, pcz_output** out);
PCZ_API pcz_status pcz_vdc(const pcz_function* f, const pcz_probe_options* o, pcz_output** out);

PCZ_API const char* pcz_output_json(const pcz_output* o);
PCZ_API const char* pcz_output_csv(const pcz_output* o); /* "" when absent */
PCZ_API const char* pcz_output_dot(const pcz_output* o); /* "" when absent */
PCZ_API void pcz_output_free(pcz_output* o);

/* Message of the last failure on this thread. */
PCZ_API const char* pcz_last_error(void);
PCZ_API const char* pcz_status_name(pcz_status s);
/* 0 ok, 2 parse/flat input, 3 verification, 4 precision, 5 budget, 1 other. */
PCZ_API int pcz_exit_code(pcz_status s);

/* Starting ball precision in bits (default 128). */
PCZ_API pcz_status pcz_set_precision(long bits);
PCZ_API long pcz_get_precision(void);

#ifdef __cplusplus
}
#endif

#endif
