#ifndef POSETPOLY_H
#define POSETPOLY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(POSETPOLY_BUILDING)
#    define PP_API __declspec(dllexport)
#  else
#    define PP_API __declspec(dllimport)
#  endif
#else
#  define PP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pp_poset pp_poset;

typedef enum pp_status {
  PP_OK = 0,
  PP_ERR_PARSE = 1,         /* syntax error in an expression or JSON */
  PP_ERR_UNBOUND = 2,       /* name used before its let */
  PP_ERR_INVALID = 3,       /* cycle, duplicate or unknown label */
  PP_ERR_TOO_LARGE = 4,     /* more than 64 elements or 4096 vertices */
  PP_ERR_NOT_IN_FAMILY = 5, /* no decomposition into X-free pieces */
  PP_ERR_LEAF_TOO_LARGE = 6,
  PP_ERR_CONFIG = 7,        /* bad option value or unknown suite */
  PP_ERR_IO = 8,
  PP_ERR_ARGUMENT = 9,      /* null pointer or bad enum */
  PP_ERR_INTERNAL = 10
} pp_status;

typedef enum pp_kind { PP_ORDER = 0, PP_CHAIN = 1 } pp_kind;

/* PP_AUTO: brute force up to max_brute elements, recursion above. */
typedef enum pp_method { PP_AUTO = 0, PP_BRUTE = 1, PP_RECURSIVE = 2 } pp_method;

typedef enum pp_format { PP_JSON = 0, PP_CSV = 1 } pp_format;

typedef enum pp_export_what { PP_VREP = 0, PP_HREP = 1, PP_FACES = 2 } pp_export_what;

typedef struct pp_config {
  uint64_t seed;
  int32_t max_brute;
  int32_t corpus_size;
  uint32_t workers;       /* 0: one per hardware thread */
  pp_format format;
  const char* cache_dir;  /* NULL: no cache */
} pp_config;

/* seed 1, max_brute 8, corpus_size 200, workers 0, JSON, no cache. */
PP_API void pp_config_default(pp_config* cfg);
/* PP_ERR_CONFIG with a message if a field is out of range. */
PP_API pp_status pp_config_validate(const pp_config* cfg);

/* Message for the last failing call on this thread; "" if none. */
PP_API const char* pp_last_error(void);
/* Line and column of the last PP_ERR_PARSE, 0 if unknown. */
PP_API int pp_last_error_line(void);
PP_API int pp_last_error_column(void);

PP_API const char* pp_version(void);

/* Strings returned through char** belong to the caller. */
PP_API void pp_string_free(char* s);

PP_API pp_status pp_poset_parse(const char* expr, pp_poset** out);
PP_API pp_status pp_poset_from_json(const char* json, pp_poset** out);
/* JSON if text is an object with "labels", else an expression. */
PP_API pp_status pp_poset_load(const char* text, pp_poset** out);
PP_API pp_status pp_poset_random(int n, uint64_t seed, double edge_prob, pp_poset** out);
PP_API void pp_poset_free(pp_poset* p);

PP_API int pp_poset_size(const pp_poset* p);
PP_API pp_status pp_poset_is_x_free(const pp_poset* p, int* out);
PP_API pp_status pp_poset_to_json(const pp_poset* p, char** out);

/* Coefficients of the f-polynomial, f_{-1} first. *len receives the full
   length even when cap is smaller. */
PP_API pp_status pp_fvector(const pp_poset* p, pp_kind kind, pp_method method, int max_brute,
                            uint64_t* coeffs, size_t cap, size_t* len);

/* Report commands. Each writes the formatted text to *out. cfg may be NULL
   for defaults. */
PP_API pp_status pp_describe(const pp_poset* p, const pp_config* cfg, char** out);
PP_API pp_status pp_fvector_report(const pp_poset* p, pp_kind kind, pp_method method,
                                   const pp_config* cfg, char** out);
/* *holds is 1 when f_O <= f_C. */
PP_API pp_status pp_compare(const pp_poset* p, pp_method method, const pp_config* cfg,
                            char** out, int* holds);
/* *in_family is 0 for NotInFamily; that is not an error. */
PP_API pp_status pp_decompose(const pp_poset* p, char** out, int* in_family);
PP_API pp_status pp_export(const pp_poset* p, pp_kind kind, pp_export_what what, char** out);

/* NULL-terminated list of suite names. */
PP_API const char* const* pp_suite_names(void);
/* *passed is 0 if any check failed; the report names the first failure. */
PP_API pp_status pp_verify(const char* suite, const pp_config* cfg, char** out, int* passed);
PP_API pp_status pp_corpus(const pp_config* cfg, char** out);

#ifdef __cplusplus
}
#endif

#endif
