/*
 * Copyright 2026 The qrloop Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QRLOOP_H
#define QRLOOP_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define QRL_API __declspec(dllexport)
#else
#define QRL_API __attribute__((visibility("default")))
#endif

typedef struct qrl_context qrl_context;
typedef struct qrl_result qrl_result;

typedef enum qrl_status {
    QRL_OK = 0,
    QRL_INTERNAL = 1,
    QRL_UNDETERMINED = 2,
    QRL_INVALID_INPUT = 3,
    QRL_NOT_QUASI_REGULAR = 4,
    QRL_VERIFICATION_FAILED = 5
} qrl_status;

typedef enum qrl_format { QRL_FORMAT_PLAIN = 0, QRL_FORMAT_MARKDOWN = 1, QRL_FORMAT_JSON = 2 } qrl_format;

QRL_API const char *qrl_version(void);
QRL_API const char *qrl_status_name(qrl_status status);

/* A context is not shared between threads; use one per thread. */
QRL_API qrl_status qrl_context_new(qrl_context **out);
QRL_API void qrl_context_free(qrl_context *ctx);

/* Message of the last failed call on ctx, "" after a success. */
QRL_API const char *qrl_last_error(const qrl_context *ctx);

/*
 * Every operation writes a result on QRL_OK, QRL_UNDETERMINED and
 * QRL_VERIFICATION_FAILED, and leaves *out NULL otherwise.
 * params is "n=5,m=2", "" or NULL.
 */
QRL_API qrl_status qrl_decompose_group(qrl_context *ctx, const char *group, int prime, qrl_format format,
                                       qrl_result **out);
QRL_API qrl_status qrl_loop_space(qrl_context *ctx, const char *case_type, const char *params, int prime,
                                  qrl_format format, qrl_result **out);
QRL_API qrl_status qrl_exponent(qrl_context *ctx, const char *case_type, const char *params, int prime,
                                qrl_format format, qrl_result **out);
QRL_API qrl_status qrl_exponent_expr(qrl_context *ctx, const char *expression, int prime, qrl_format format,
                                     qrl_result **out);
QRL_API qrl_status qrl_rational(qrl_context *ctx, const char *case_type, const char *params, int prime,
                                qrl_format format, qrl_result **out);

/* space is "sphere" or "B"; the group is π_{2m-1+t}. */
QRL_API qrl_status qrl_pi(qrl_context *ctx, const char *space, int m, int t, int prime, qrl_format format,
                          qrl_result **out);

/* which is "classical" or "exceptional"; max_n only applies to the classical sweep. */
QRL_API qrl_status qrl_tables(qrl_context *ctx, const char *which, int max_n, qrl_format format,
                              qrl_result **out);

QRL_API qrl_status qrl_verify_appendix(qrl_context *ctx, int prime, qrl_format format, qrl_result **out);
QRL_API qrl_status qrl_verify_fi(qrl_context *ctx, qrl_format format, qrl_result **out);

QRL_API const char *qrl_result_text(const qrl_result *result);
QRL_API void qrl_result_free(qrl_result *result);

#ifdef __cplusplus
}
#endif

#endif /* QRLOOP_H */
