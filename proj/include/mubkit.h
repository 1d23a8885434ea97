/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef MUBKIT_H
#define MUBKIT_H

/* C interface of the mubkit shared library.
 *
 * All objects are reached through opaque handles; every function returns an
 * error code from mub_status and never throws across the boundary. When a
 * call fails, mub_last_error() returns a human-readable message for the
 * current thread. Strings handed out through char** are heap-allocated and
 * must be released with mub_string_free().
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define MUBKIT_VERSION "0.1.0"

typedef struct mub_set mub_set_t; /* a set of orthonormal bases in one dimension */

typedef enum {
  MUB_OK = 0,
  MUB_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad index, bad value */
  MUB_ERR_DIMENSION = 2,        /* shape or dimension mismatch */
  MUB_ERR_UNSUPPORTED = 3,      /* parameters outside the supported range */
  MUB_ERR_PARSE = 4,            /* malformed or schema-invalid document */
  MUB_ERR_INTERNAL = 5
} mub_status;

const char* mub_version(void);
/* Message for the last failing call on this thread; empty string if none. */
const char* mub_last_error(void);

void mub_set_free(mub_set_t* set);
void mub_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Constructors. Every constructor verifies its output and records the
 * construction method and certification outcome in the set's metadata.  */

/* Standard, normalized Hadamard, and circular bases in dimension 2. */
mub_status mub_construct_hadamard2_set(mub_set_t** out);
/* d+1 bases from shift/phase operator eigenbases; dim must be prime <= 13. */
mub_status mub_construct_weyl(int dim, mub_set_t** out);
/* p^n+1 bases from the finite-field quadratic-phase construction; p odd. */
mub_status mub_construct_galois(int p, int n, mub_set_t** out);
/* Five bases from the commuting two-qubit Pauli classes (d = 4). */
mub_status mub_construct_pauli4(mub_set_t** out);
/* Three bases in d = 6 from Kronecker pairing of the d=2 and d=3 sets. */
mub_status mub_construct_tensor6(mub_set_t** out);
/* Standard basis of dimension 6 alone (search baseline). */
mub_status mub_construct_standard6(mub_set_t** out);
/* Standard basis plus one Fourier-family member per 5-phase vector.
 * thetas points at count*5 doubles (row-major); count may be 0. The set is
 * verified and its metadata records certified true/false; an uncertified
 * result is not an error. */
mub_status mub_construct_fourier_family(const double* thetas, int count, mub_set_t** out);

/* ------------------------------------------------------------------ */
/* Accessors. */

int mub_set_dim(const mub_set_t* set);         /* 0 on null */
int mub_set_basis_count(const mub_set_t* set); /* 0 on null */
/* Label of basis `index`; pointer owned by the set, valid until free. */
const char* mub_set_basis_label(const mub_set_t* set, int index);
/* Entry (row, col) of basis `index`. */
mub_status mub_set_entry(const mub_set_t* set, int index, int row, int col, double* re, double* im);
/* Metadata value for `key`, or NULL when absent; owned by the set. */
const char* mub_set_metadata(const mub_set_t* set, const char* key);

/* ------------------------------------------------------------------ */
/* Verification. */

/* Check orthonormality of every basis (ortho_tol) and unbiasedness of every
 * pair (unbiased_tol). Any output pointer may be NULL. certified is 1/0. */
mub_status mub_set_verify(const mub_set_t* set, double unbiased_tol, double ortho_tol,
                          int* certified, int* worst_a, int* worst_b, double* max_deviation);
/* Orthonormality defect of one basis. */
mub_status mub_set_basis_orthonormality(const mub_set_t* set, int index, double* max_deviation);
/* Squared-overlap table between bases a and b; table receives dim*dim
 * doubles, row-major. max_deviation may be NULL. */
mub_status mub_set_overlap_table(const mub_set_t* set, int a, int b, double* table, double* max_deviation);
/* Sum of squared deviations of all cross overlaps from 1/d. */
mub_status mub_set_defect(const mub_set_t* set, double* value);

/* ------------------------------------------------------------------ */
/* Serialization (schema "mub_basis_set", version 1.x). */

mub_status mub_set_to_json(const mub_set_t* set, char** json_out);
mub_status mub_set_from_json(const char* json_text, mub_set_t** out);

/* ------------------------------------------------------------------ */
/* Dimension-4 phase-family analysis. */

/* Sign configuration (e2, e3, e4) of Hadamard columns i, j (1-based). */
mub_status mub_phase_sign_config(int i, int j, int* e2, int* e3, int* e4);
/* |4*overlap|^2 - 4 for columns (i, j) at phase differences (da, db, dg);
 * zero iff that vector pair meets the unbiasedness condition. */
mub_status mub_phase_criterion(int i, int j, double da, double db, double dg, double* value);
/* 1 iff all 16 column pairs meet the condition within tol. */
mub_status mub_phase_pair_unbiased(double da, double db, double dg, double tol, int* unbiased);

/* ------------------------------------------------------------------ */
/* Dimension-6 search. */

/* Minimize the squared-overlap deviation of one additional Fourier-family
 * basis against `existing`. Identical inputs produce byte-identical report
 * JSON. base_set_name is only echoed into the report. */
mub_status mub_search_additional(const mub_set_t* existing, const char* base_set_name,
                                 uint64_t seed, int restarts, int max_iters, double tol,
                                 char** report_json, double* best_defect);
/* Convenience wrapper: base_set is one of "standard", "standard+fourier",
 * "tensor-triple". */
mub_status mub_search6(const char* base_set, uint64_t seed, int restarts, int max_iters, double tol,
                       char** report_json, double* best_defect);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MUBKIT_H */
