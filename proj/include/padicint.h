/*
 * padicint - exact Volkenborn / fermionic p-adic integration of polynomials,
 * special-number families, and an identity verification catalog.
 *
 * C API over opaque handles. Every function that can fail returns an int
 * status code (PINT_OK on success); pint_last_error() describes the most
 * recent failure on the calling thread. Returned strings are heap-allocated
 * and must be released with pint_string_free(); handles with their matching
 * *_free function.
 */
#ifndef PADICINT_H
#define PADICINT_H

#ifdef __cplusplus
extern "C" {
#endif

#define PINT_OK 0
#define PINT_ERR_INVALID 1  /* bad argument or precondition violation */
#define PINT_ERR_DOMAIN 2   /* mathematical domain error (division by zero, ...) */
#define PINT_ERR_PARSE 3    /* unparseable text input */
#define PINT_ERR_INTERNAL 4 /* internal consistency failure */

typedef struct pint_rat pint_rat;
typedef struct pint_poly pint_poly;
typedef struct pint_series pint_series;

const char* pint_version(void);
/* Message for the last failing call on this thread. */
const char* pint_last_error(void);
void pint_string_free(char* s);

/* ---- exact rationals ---------------------------------------------------- */

/* Accepts "num" or "num/den" with arbitrary-precision decimal parts. */
int pint_rat_parse(const char* text, pint_rat** out);
int pint_rat_from_ll(long long value, pint_rat** out);
void pint_rat_free(pint_rat* r);
/* Canonical form: "num" when the denominator is 1, else "num/den". */
int pint_rat_to_string(const pint_rat* r, char** out);

int pint_rat_add(const pint_rat* a, const pint_rat* b, pint_rat** out);
int pint_rat_sub(const pint_rat* a, const pint_rat* b, pint_rat** out);
int pint_rat_mul(const pint_rat* a, const pint_rat* b, pint_rat** out);
int pint_rat_div(const pint_rat* a, const pint_rat* b, pint_rat** out);
int pint_rat_neg(const pint_rat* a, pint_rat** out);
int pint_rat_pow(const pint_rat* a, long long e, pint_rat** out);
/* -1, 0, +1 */
int pint_rat_cmp(const pint_rat* a, const pint_rat* b, int* out);

/* p-adic valuation: *is_infinite is set for input 0, otherwise *ord. */
int pint_rat_ord_p(const pint_rat* x, unsigned prime, int* is_infinite, long long* ord);
/* |x|_p as an exact rational. */
int pint_rat_norm_p(const pint_rat* x, unsigned prime, pint_rat** out);

/* ---- truncated power series --------------------------------------------- */

/* kind: "exp", "log1p", "t-over-log1p". */
int pint_series_std(const char* kind, int order, pint_series** out);
/* (1+t)^alpha. */
int pint_series_binom_pow(const pint_rat* alpha, int order, pint_series** out);
void pint_series_free(pint_series* s);
int pint_series_order(const pint_series* s, int* out);
int pint_series_coeff(const pint_series* s, int n, pint_rat** out);

/* ---- polynomials --------------------------------------------------------- */

/* Grammar: sums of terms "c", "c*x^n", "x^n", "ff(n)", "rf(n)", "binom(n)",
 * "cf(n)", and products of such factors joined with '*'. */
int pint_poly_parse(const char* text, pint_poly** out);
void pint_poly_free(pint_poly* p);
/* Canonical monomial-basis rendering; parses back to the same polynomial. */
int pint_poly_to_string(const pint_poly* p, char** out);
int pint_poly_eval(const pint_poly* p, const pint_rat* x, pint_rat** out);
int pint_poly_add(const pint_poly* a, const pint_poly* b, pint_poly** out);
int pint_poly_mul(const pint_poly* a, const pint_poly* b, pint_poly** out);

/* measure: "volkenborn" or "fermionic". Both integration routes are
 * evaluated and compared internally; disagreement is PINT_ERR_INTERNAL. */
int pint_poly_integral(const pint_poly* p, const char* measure, pint_rat** out);
/* Finite approximant at level N: the Riemann mean for volkenborn, the
 * alternating sum for fermionic (odd primes only). */
int pint_poly_finite_sum(const pint_poly* p, const char* measure, unsigned prime, int level,
                         pint_rat** out);

/* ---- special-number tables ----------------------------------------------- */

/* Triangles: "stirling1", "stirling2", "stirling1-unsigned", "lah",
 * "lah-unsigned", "central-t", "central-T", "central-even-t",
 * "central-even-T", "lambda-stirling2" (requires param). */
int pint_triangle_entry(const char* family, long long n, long long k, const pint_rat* param,
                        pint_rat** out);
/* Sequences: "bernoulli", "euler", "euler-star", "daehee", "daehee2",
 * "changhee", "changhee2", "harmonic", "fubini", "cauchy-b2", "y-b", "y-e". */
int pint_sequence_value(const char* family, long long n, pint_rat** out);

/* Row-major triangle / sequence rendering, format "tsv" or "json". */
int pint_render_triangle(const char* family, int max_n, const pint_rat* param,
                         const char* format, char** out);
int pint_render_sequence(const char* family, int max_n, const char* format, char** out);

/* Reference tables with byte-stable output: "stirling1", "stirling2",
 * "lah-unsigned" (rows 0..5), "central-even-t", "central-even-T" (7x7). */
int pint_emit_table(const char* which, int max_rows, const char* format, char** out);

/* ---- identity catalog ----------------------------------------------------- */

/* Newline-separated list of all catalog ids, in manifest order. */
int pint_catalog_ids(char** out);
/* Runs the catalog (ids_csv NULL or "" = all; otherwise comma-separated).
 * format "tsv" or "json"; include_errata adds the erratum-candidate report
 * lines. *fail_count receives the number of FAIL results. */
int pint_verify(const char* ids_csv, int max_n, const char* format, int include_errata,
                char** report, int* fail_count);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PADICINT_H */
