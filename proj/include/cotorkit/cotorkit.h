#ifndef COTORKIT_COTORKIT_H
#define COTORKIT_COTORKIT_H

/* C interface to the cotorkit library. Handles are opaque; every call that can
   fail returns a status and leaves a message in cotorkit_last_error(). Strings
   returned through char** are owned by the caller and released with
   cotorkit_free_string. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cotorkit_status {
  COTORKIT_OK = 0,
  COTORKIT_PARSE_ERROR = 1,
  COTORKIT_VALIDATION_ERROR,
  COTORKIT_DIMENSION_MISMATCH,
  COTORKIT_FIELD_MISMATCH,
  COTORKIT_ALGEBRA_MISMATCH,
  COTORKIT_SIDE_MISMATCH,
  COTORKIT_NON_ASSOCIATIVE,
  COTORKIT_BAD_IDENTITY,
  COTORKIT_BAD_IDEMPOTENTS,
  COTORKIT_NOT_PRIMITIVE,
  COTORKIT_INHOMOGENEOUS_RELATION,
  COTORKIT_NOT_NILPOTENT_BY_BOUND,
  COTORKIT_UNSUPPORTED_FIELD,
  COTORKIT_RELATION_VIOLATED,
  COTORKIT_NOT_UNITAL,
  COTORKIT_HOMOTHETY_NOT_ISO,
  COTORKIT_EXT_NOT_VANISHING,
  COTORKIT_PRECONDITION_FAILED,
  COTORKIT_UNKNOWN_CHECK,
  COTORKIT_INTERNAL_INCONSISTENCY,
  COTORKIT_INTERNAL_ERROR,
  COTORKIT_RESOURCE_LIMIT,
  COTORKIT_INVALID_ARGUMENT,
  COTORKIT_OUT_OF_MEMORY
} cotorkit_status;

typedef enum cotorkit_format { COTORKIT_TEXT = 0, COTORKIT_JSON = 1 } cotorkit_format;

typedef struct cotorkit_algebra cotorkit_algebra;
typedef struct cotorkit_module cotorkit_module;
typedef struct cotorkit_context cotorkit_context;

const char* cotorkit_status_name(cotorkit_status s);
/* Message of the last failed call on this thread; empty after a success. */
const char* cotorkit_last_error(void);
void cotorkit_free_string(char* s);
const char* cotorkit_version(void);

/* Reformats JSON text with sorted keys and a stable layout. */
cotorkit_status cotorkit_canonical_json(const char* json, char** out);

cotorkit_status cotorkit_algebra_load(const char* path, cotorkit_algebra** out);
void cotorkit_algebra_free(cotorkit_algebra* a);
cotorkit_status cotorkit_algebra_describe(const cotorkit_algebra* a, cotorkit_format fmt, char** out);

/* The module file names its algebra by path or inline. */
cotorkit_status cotorkit_module_load(const char* path, cotorkit_module** out);
void cotorkit_module_free(cotorkit_module* m);
size_t cotorkit_module_dim(const cotorkit_module* m);
/* The path given at load time, or a derived label such as "Tr(path)". */
const char* cotorkit_module_id(const cotorkit_module* m);
cotorkit_status cotorkit_module_describe(const cotorkit_module* m, cotorkit_format fmt, char** out);
/* Module file contents with the algebra inlined; loadable by cotorkit_module_load. */
cotorkit_status cotorkit_module_to_json(const cotorkit_module* m, char** out);

/* spec is "matlis", "regular" or the path of a bimodule file whose left algebra
   is the algebra of m. The semidualizing conditions are checked through bound. */
cotorkit_status cotorkit_context_create(const cotorkit_module* m, const char* spec, size_t bound,
                                        cotorkit_context** out);
void cotorkit_context_free(cotorkit_context* c);

cotorkit_status cotorkit_resolve(const cotorkit_module* m, int injective, size_t length, int with_maps,
                                 cotorkit_format fmt, char** out);
/* dim Ext^i(M, N) for left modules over one algebra. */
cotorkit_status cotorkit_ext_dim(const cotorkit_module* m, const cotorkit_module* n, size_t i, size_t* out);
/* dim Tor_i(X, N); a left X over a commutative algebra is read as a right module. */
cotorkit_status cotorkit_tor_dim(const cotorkit_module* x, const cotorkit_module* n, size_t i, size_t* out);

cotorkit_status cotorkit_transpose(const cotorkit_module* m, const cotorkit_context* c, cotorkit_module** out);
cotorkit_status cotorkit_cotranspose(const cotorkit_module* m, const cotorkit_context* c, cotorkit_module** out);

cotorkit_status cotorkit_invariants(const cotorkit_module* m, const cotorkit_context* c, size_t bound,
                                    cotorkit_format fmt, char** out);

/* 0 -> M -> X -> Y -> 0. Returns COTORKIT_PRECONDITION_FAILED when the n-th
   cosyzygy is not n-cotorsionfree. *verified is 1 when the verifier accepts. */
cotorkit_status cotorkit_approx(const cotorkit_module* m, const cotorkit_context* c, size_t n,
                                int bounded_infinity, cotorkit_format fmt, char** out, int* verified);

/* config_json keys: seed, count, bound, corrupt, checks, per_check,
   max_algebra_dim, max_module_dim, field. Missing keys take defaults. */
cotorkit_status cotorkit_verify(const char* config_json, cotorkit_format fmt, char** out, size_t* failures);

#ifdef __cplusplus
}
#endif

#endif
