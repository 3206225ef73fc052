/*
   Copyright 2026 The cherednik authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* C surface of the shared library. All composite inputs and outputs are JSON
 * strings; every char** output is allocated by the library and must be
 * released with chk_string_free. Handles are opaque and single-owner.
 * On any non-CHK_OK status, chk_last_error() returns a thread-local message.
 */

#ifndef CHEREDNIK_H
#define CHEREDNIK_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct chk_field chk_field;
typedef struct chk_rep chk_rep;

typedef enum chk_status {
    CHK_OK = 0,
    CHK_NOT_PRIME,
    CHK_EVEN_CHARACTERISTIC,
    CHK_BAD_DEGREE,
    CHK_DIVISION_BY_ZERO,
    CHK_CONTEXT_MISMATCH,
    CHK_SINGULAR,
    CHK_BAD_PARAMETER,
    CHK_DIMENSION_MISMATCH,
    CHK_SYNTAX_ERROR,
    CHK_EXPONENT_ON_S,
    CHK_NOT_SCALAR,
    CHK_INCONCLUSIVE,
    CHK_BUDGET_EXCEEDED,
    CHK_BAD_INPUT,
    CHK_UNKNOWN
} chk_status;

const char* chk_last_error(void);
void chk_string_free(char* s);

/* GF(p^m) with the canonical modulus; p must be an odd prime, m >= 1. */
chk_status chk_field_create(int64_t p, int m, chk_field** out);
void chk_field_free(chk_field* f);
chk_status chk_field_to_json(const chk_field* f, char** out_json);

/* Normal form of an expression in X, X^-1 (Xinv or X^-n), s, y over H(t,k).
 * k_json is a coefficient array. out_json gets the term list, out_text the
 * printable form; either output pointer may be NULL. */
chk_status chk_normal_form(const chk_field* f, int t, const char* k_json,
                           const char* expr, char** out_json, char** out_text);

/* spec_json: {"t", "k", "family", "parameters"}. */
chk_status chk_rep_build(const chk_field* f, const char* spec_json, chk_rep** out);
/* Full representation JSON as produced by chk_rep_to_json; the matrices are
 * re-validated against the defining relations. */
chk_status chk_rep_from_json(const char* rep_json, chk_rep** out);
void chk_rep_free(chk_rep* r);
chk_status chk_rep_to_json(const chk_rep* r, char** out_json);
int chk_rep_dim(const chk_rep* r);

/* Direct sum of two representations over the same parameters. */
chk_status chk_rep_direct_sum(const chk_rep* a, const chk_rep* b, chk_rep** out);

/* Reports: array of {"name", "status", "witness"}. */
chk_status chk_rep_verify(const chk_rep* r, char** out_json);
chk_status chk_rep_central_character(const chk_rep* r, char** out_json);
chk_status chk_rep_eigen(const chk_rep* r, char** out_json);
chk_status chk_rep_irreducible(const chk_rep* r, uint64_t seed, char** out_json);
chk_status chk_rep_intertwiner_laws(const chk_rep* r, char** out_json);

/* {"isomorphic", "criterion", "intertwiner"?}. */
chk_status chk_iso(const chk_rep* a, const chk_rep* b, uint64_t seed,
                   char** out_json);
chk_status chk_iso_criterion(const chk_field* f, const char* spec_json_a,
                             const char* spec_json_b, char** out_json);

/* Family census at normalized (t, k) with one verified sample per family. */
chk_status chk_classify(const chk_field* f, int t, const char* k_json,
                        uint64_t seed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
