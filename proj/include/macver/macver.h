/* macver: exact verification of denominator and Macdonald identities for
 * finite and affine root systems.
 *
 * Every function returning char* through an out parameter hands ownership to
 * the caller; release it with macver_free. On any status other than MACVER_OK
 * and MACVER_MISMATCH, macver_last_error() describes the failure for the
 * calling thread. */
#ifndef MACVER_MACVER_H
#define MACVER_MACVER_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(MACVER_BUILDING_LIBRARY)
#define MACVER_API __attribute__((visibility("default")))
#else
#define MACVER_API
#endif

typedef enum macver_status {
  MACVER_OK = 0,
  MACVER_MISMATCH = 1,
  MACVER_ERR_USAGE = 2,
  MACVER_ERR_DOMAIN = 3,
  MACVER_ERR_CAPACITY = 4,
  MACVER_ERR_INTERNAL = 5
} macver_status;

typedef struct macver_config macver_config;
typedef struct macver_affine macver_affine;
typedef struct macver_finite macver_finite;
typedef struct macver_report macver_report;

MACVER_API const char* macver_version(void);
/* Message of the last failed call on this thread; empty if none. */
MACVER_API const char* macver_last_error(void);
MACVER_API void macver_free(char* text);

/* Keys: "order", "scale", "lattice_scale" (rationals "p" or "p/q"),
 * "weyl_cap", "threads" (positive integers). */
MACVER_API macver_status macver_config_create(macver_config** out);
MACVER_API macver_status macver_config_set(macver_config* cfg, const char* key, const char* value);
MACVER_API void macver_config_destroy(macver_config* cfg);

/* label is a Saito label such as "A3(1)" or "BC2(2)"; scale may be NULL. */
MACVER_API macver_status macver_affine_create(const char* label, const char* scale,
                                              macver_affine** out);
MACVER_API macver_status macver_affine_info_json(const macver_affine* sys, char** out);
MACVER_API macver_status macver_affine_roots_json(const macver_affine* sys, int max_level,
                                                  char** out);
MACVER_API void macver_affine_destroy(macver_affine* sys);

/* label is a finite type such as "E6" or "BC2". */
MACVER_API macver_status macver_finite_create(const char* label, const char* scale,
                                              macver_finite** out);
MACVER_API macver_status macver_finite_info_json(const macver_finite* rs, char** out);
MACVER_API macver_status macver_finite_roots_json(const macver_finite* rs, char** out);
MACVER_API void macver_finite_destroy(macver_finite* rs);

/* identity: "denominator" (finite or affine label), "macdonald", "strange",
 * "dual-coxeter" (affine labels) or "census" (finite label). Returns MACVER_OK
 * when the identity holds, MACVER_MISMATCH when it was checked and fails; in
 * both cases *out holds the report. cfg may be NULL. */
MACVER_API macver_status macver_verify(const char* identity, const char* label,
                                       const macver_config* cfg, macver_report** out);
MACVER_API int macver_report_passed(const macver_report* report);
MACVER_API macver_status macver_report_json(const macver_report* report, char** out);
MACVER_API void macver_report_destroy(macver_report* report);

/* side: "lhs" or "rhs" of the Macdonald identity for an affine label, or
 * "eta" with label holding the rational scale s of eta(q^s). Output is the
 * series JSON {"denominator", "order_num", "terms"}. */
MACVER_API macver_status macver_expand_json(const char* side, const char* label,
                                            const macver_config* cfg, char** out);

/* Folds a finite or affine system. automorphism: "flip", "triality" or, for
 * D_{2l+2}(1), "bc". */
MACVER_API macver_status macver_fold_json(const char* label, const char* automorphism,
                                          char** out);

/* name: "folding", "nomenclature" or "nonreduced". */
MACVER_API macver_status macver_table_json(const char* name, char** out);

/* scheme: "saito", "kac", "moody", "macdonald" or "carter". */
MACVER_API macver_status macver_nomenclature(const char* label, const char* scheme, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MACVER_MACVER_H */
