/*
  Copyright 2026 The mckay Authors

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

#ifndef MCKAY_MCKAY_H
#define MCKAY_MCKAY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef MCKAY_BUILDING_LIBRARY
#    define MCKAY_API __declspec(dllexport)
#  else
#    define MCKAY_API __declspec(dllimport)
#  endif
#else
#  define MCKAY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mckay_status {
  MCKAY_OK = 0,
  MCKAY_E_INVALID_SPEC = 1,
  MCKAY_E_INVALID_ARGUMENT = 2,
  MCKAY_E_ORDER_BOUND = 3,
  MCKAY_E_ARITHMETIC = 4,    /* conductor mismatch, division by zero, ... */
  MCKAY_E_COMPUTATION = 5,   /* orthogonality failure, non-integral multiplicity, ... */
  MCKAY_E_INTERNAL = 6
} mckay_status;

typedef enum mckay_format {
  MCKAY_FORMAT_TEXT = 0,
  MCKAY_FORMAT_JSON = 1,
  MCKAY_FORMAT_CSV = 2, /* cartan matrices only */
  MCKAY_FORMAT_DOT = 3  /* quivers only */
} mckay_format;

typedef enum mckay_matrix {
  MCKAY_MATRIX_M = 0, /* adjacency */
  MCKAY_MATRIX_B = 1, /* pre-Cartan */
  MCKAY_MATRIX_A = 2  /* generalized Cartan */
} mckay_matrix;

/* Opaque group handle. Not safe for concurrent use; distinct handles are. */
typedef struct mckay_group mckay_group;

/* 0 selects the library default bound (20000). */
MCKAY_API mckay_status mckay_group_open(const char* spec, uint64_t max_order, mckay_group** out);
MCKAY_API void mckay_group_close(mckay_group* group);

MCKAY_API mckay_status mckay_group_order(mckay_group* group, uint64_t* out);
MCKAY_API mckay_status mckay_group_exponent(mckay_group* group, uint64_t* out);
MCKAY_API mckay_status mckay_group_conductor(mckay_group* group, uint32_t* out);
MCKAY_API mckay_status mckay_group_class_count(mckay_group* group, uint64_t* out);

/* Rendered output goes to *out, released with mckay_string_free. */
MCKAY_API mckay_status mckay_render_info(mckay_group* group, mckay_format format, char** out);
MCKAY_API mckay_status mckay_render_chartab(mckay_group* group, mckay_format format, char** out);
MCKAY_API mckay_status mckay_render_quiver(mckay_group* group, mckay_format format, char** out);
MCKAY_API mckay_status mckay_render_cartan(mckay_group* group, mckay_matrix which,
                                           mckay_format format, char** out);

/* *passed is 1 iff no check failed. */
MCKAY_API mckay_status mckay_verify(const char* spec, uint64_t max_order, mckay_format format,
                                    char** out, int* passed);
/* Runs the catalog sweep with parametric families up to max_m. */
MCKAY_API mckay_status mckay_verify_all(int max_m, mckay_format format, char** out, int* passed);

MCKAY_API mckay_status mckay_list_specs(mckay_format format, char** out);

MCKAY_API void mckay_string_free(char* s);

/* Message of the last failure on this thread; empty after success. */
MCKAY_API const char* mckay_last_error(void);
MCKAY_API const char* mckay_status_name(mckay_status status);

#ifdef __cplusplus
}
#endif

#endif
