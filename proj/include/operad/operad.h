#ifndef OPERAD_C_API_H
#define OPERAD_C_API_H

/* C interface of the operad library. Every entry point returns 0 on
 * success, 1 when a verification failed, 2 on a usage or schema error;
 * operad_last_error() describes the most recent failure on the calling
 * thread. Strings handed out through char** are heap copies owned by the
 * caller; release them with operad_string_free. Payloads are JSON
 * documents in the formats the library reads and writes on disk. */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct operad_handle operad_t;

const char *operad_version(void);
const char *operad_last_error(void);

void operad_free(operad_t *p);
void operad_string_free(char *s);

/* request: {"builder": ..., "N": ...} plus builder-specific fields.
 * builders: "as", "com", "uni" (N, allow_large);
 * "d" (N, one of algebra | random_d + seed | polynomial_d, chain,
 *      allow_large);
 * "signature-block" (w, N, module as {w,d,generators} | trivial_d | sign);
 * "uni-plus-m" (same module fields);
 * "from-signature", "unitary-from-signature" (signature array, N);
 * "hadamard" (left, right: nested requests);
 * "sum" (blocks: array of nested requests). */
int operad_build(const char *request_json, operad_t **out);

int operad_load(const char *path, operad_t **out);
/* manifest_json == NULL keeps the manifest stored in the handle */
int operad_save(const operad_t *p, const char *path,
                const char *manifest_json);
/* the manifest text loaded with the operad, "" when it carried none */
const char *operad_stored_manifest(const operad_t *p);

/* reports; manifest_json may be NULL and is embedded verbatim */
int operad_info_json(const operad_t *p, const char *manifest_json,
                     char **out);
int operad_signature_json(const operad_t *p, const char *manifest_json,
                          char **out);
int operad_series_json(const operad_t *p, const char *manifest_json,
                       char **out);
int operad_truncate_json(const operad_t *p, int k, const char *manifest_json,
                         char **out);

/* what: any of {"axioms":true, "basis_theorem":{"max_arity":N},
 * "truncatified":true, "poisson":true}. The report lands in *out with an
 * overall "ok"; the return code is 1 when a requested check failed. */
int operad_verify_json(const operad_t *p, const char *what_json,
                       const char *manifest_json, char **out);

int operad_truncatify(const operad_t *p, operad_t **out);

/* request: {"check":"quotient-tower","N":...} (p unused, may be NULL);
 * {"check":"com-collapse"}; {"check":"roundtrip"} on p; or
 * {"check":"roundtrip","algebra":{...},"N":...} (p NULL). Returns 1 when
 * the classification report says no. */
int operad_classify_json(const operad_t *p, const char *request_json,
                         const char *manifest_json, char **out);

int operad_algebra_to_operad(const char *algebra_json, int max_arity,
                             int allow_large, operad_t **out);

int operad_sha256_file(const char *path, char **out);
int operad_set_threads(int n);

#ifdef __cplusplus
}
#endif

#endif /* OPERAD_C_API_H */
