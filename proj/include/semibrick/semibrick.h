/* C interface of the semibrick library.
 *
 * Every object is an opaque handle released by its *_free function. Calls
 * return an sb_status; on failure sb_last_error() describes the problem
 * (thread-local, valid until the next call on the same thread). Output
 * handles are written only on success.
 */
#ifndef SEMIBRICK_H
#define SEMIBRICK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SEMIBRICK_BUILDING_LIBRARY)
#    define SB_API __declspec(dllexport)
#  else
#    define SB_API __declspec(dllimport)
#  endif
#else
#  define SB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sb_status {
  SB_OK = 0,
  SB_ERR_USAGE = 1,         /* bad arguments, unknown builtin, mismatched quivers */
  SB_ERR_INVALID_INPUT = 2, /* parse, shape or intertwining failure; unmet precondition */
  SB_ERR_BUDGET = 3,        /* dimension budget exceeded */
  SB_ERR_INTERNAL = 4
} sb_status;

typedef struct sb_quiver sb_quiver;
typedef struct sb_rep sb_rep;
typedef struct sb_replist sb_replist;
typedef struct sb_report sb_report;

typedef struct sb_options {
  int assume_brick;
  size_t budget; /* maximum total dimension of any tower level */
  size_t levels; /* tower levels, >= 1 */
  int has_seed;  /* randomize Ext bases with `seed` */
  uint64_t seed;
} sb_options;

SB_API const char* sb_version(void);
SB_API const char* sb_last_error(void);
SB_API void sb_options_init(sb_options* opts);
SB_API void sb_string_free(char* s);

/* "k<r>" or "a<n>". */
SB_API sb_status sb_quiver_builtin(const char* name, sb_quiver** out);
SB_API sb_status sb_quiver_parse(const char* text, sb_quiver** out);
SB_API sb_status sb_quiver_serialize(const sb_quiver* q, char** out);
SB_API void sb_quiver_free(sb_quiver* q);

/* field: "Q" or a prime such as "5" / "F5". name: r<l>, x<l>, rinf, s<v>, p<v>, i<v>, kq. */
SB_API sb_status sb_rep_builtin(const sb_quiver* q, const char* field, const char* name, sb_rep** out);
SB_API sb_status sb_rep_parse(const char* text, sb_rep** out);
SB_API sb_status sb_rep_serialize(const sb_rep* r, char** out);
SB_API size_t sb_rep_total_dim(const sb_rep* r);
SB_API void sb_rep_free(sb_rep* r);

SB_API sb_status sb_replist_new(sb_replist** out);
SB_API sb_status sb_replist_push(sb_replist* list, const sb_rep* r);
/* Appends the members of a "semibrick" document or the rep of a "rep" document. */
SB_API sb_status sb_replist_append_document(sb_replist* list, const char* text);
SB_API size_t sb_replist_size(const sb_replist* list);
SB_API void sb_replist_free(sb_replist* list);

/* Canonical "report" document and its text rendering; owned by the report. */
SB_API const char* sb_report_json(const sb_report* rep);
SB_API const char* sb_report_text(const sb_report* rep);
SB_API void sb_report_free(sb_report* rep);

SB_API sb_status sb_cmd_hom(const sb_rep* left, const sb_rep* right, sb_report** out);
SB_API sb_status sb_cmd_ext(const sb_rep* left, const sb_rep* right, sb_report** out);
SB_API sb_status sb_cmd_euler(const sb_rep* left, const sb_rep* right, sb_report** out);
SB_API sb_status sb_cmd_defect(const sb_rep* m, sb_report** out);
SB_API sb_status sb_cmd_brick(const sb_rep* m, sb_report** out);
SB_API sb_status sb_cmd_semibrick(const sb_replist* members, const sb_options* opts, sb_report** out);
SB_API sb_status sb_cmd_socle(const sb_rep* m, const sb_replist* members, const sb_options* opts, sb_report** out);
SB_API sb_status sb_cmd_filtration(const sb_rep* m, const sb_replist* members, const sb_options* opts,
                                   sb_report** out);
SB_API sb_status sb_cmd_membership(const sb_rep* m, const sb_replist* members, const sb_options* opts,
                                   sb_report** out);
SB_API sb_status sb_cmd_universal(const sb_rep* base, const sb_replist* members, const sb_options* opts,
                                  sb_report** out);
SB_API sb_status sb_cmd_tower(const sb_rep* base, const sb_replist* members, const sb_options* opts, sb_report** out);
SB_API sb_status sb_cmd_endtower(const sb_rep* base, const sb_replist* members, const sb_options* opts,
                                 sb_report** out);
SB_API sb_status sb_cmd_uniserial(const sb_rep* base, const sb_replist* members, const sb_options* opts,
                                  sb_report** out);
SB_API sb_status sb_cmd_preproj(const sb_rep* base, const sb_replist* members, const sb_options* opts,
                                sb_report** out);
SB_API sb_status sb_cmd_demo_kronecker(size_t r, const char* field, sb_report** out);

#ifdef __cplusplus
}
#endif

#endif
