#ifndef PHASESPACE_H
#define PHASESPACE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point.
typedef enum PsStatus {
  PS_STATUS_OK = 0,
  PS_STATUS_NULL_POINTER = 1,
  PS_STATUS_INVALID_ARGUMENT = 2,
  PS_STATUS_NOT_REAL = 3,
  PS_STATUS_INDEX_OUT_OF_RANGE = 4,
  PS_STATUS_UNKNOWN_LABEL = 5,
  PS_STATUS_NON_FINITE = 6,
  PS_STATUS_PANIC = 7,
} PsStatus;

// Uniform electromagnetic field.
typedef struct PsField PsField;

// Linear operator on the complex phase space.
typedef struct PsOperator PsOperator;

typedef struct PsComplex {
  double re;
  double im;
} PsComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Static description of a status code. Never null.
const char *ps_status_message(enum PsStatus status);

// Message for the last failure on this thread. Valid until the next failing call
// on the same thread. Never null.
const char *ps_last_error_message(void);

// Creates a field from `e[3]` and `b[3]`.
//
// # Safety
// `e` and `b` must point to three doubles each; `out` must be writable.
enum PsStatus ps_field_new(const double *e, const double *b, struct PsField **out);

// # Safety
// `field` must come from `ps_field_new` and not be freed twice. Null is ignored.
void ps_field_free(struct PsField *field);

// Invariant `z = Σ (E + iB)ⱼ²`.
//
// # Safety
// `field` must be a live handle; `out` must be writable.
enum PsStatus ps_field_invariant(const struct PsField *field, struct PsComplex *out);

// Real field tensor `Σ Eⱼ D₀ⱼ + Bⱼ D⊥₀ⱼ`.
//
// # Safety
// `field` must be a live handle; `out` must be writable.
enum PsStatus ps_field_tensor(const struct PsField *field, struct PsOperator **out);

// Complex Faraday tensor `𝔉_c`.
//
// # Safety
// `field` must be a live handle; `out` must be writable.
enum PsStatus ps_faraday_tensor(const struct PsField *field, struct PsOperator **out);

// Closed-form `exp(τ 𝔉_c)`.
//
// # Safety
// `field` must be a live handle; `out` must be writable.
enum PsStatus ps_exp_faraday(const struct PsField *field, double tau, struct PsOperator **out);

// Closed-form momentum at proper time `tau` from a real `p0[4]`.
//
// # Safety
// `p0` and `out` must point to four doubles.
enum PsStatus ps_evolve_closed_form(const struct PsField *field,
                                    const double *p0,
                                    double tau,
                                    double *out);

// RK4 momentum at proper time `tau` using `steps` steps.
//
// # Safety
// `p0` and `out` must point to four doubles.
enum PsStatus ps_evolve_numeric(const struct PsField *field,
                                const double *p0,
                                double tau,
                                size_t steps,
                                double *out);

// Operator from 16 row-major entries.
//
// # Safety
// `entries` must point to 16 values; `out` must be writable.
enum PsStatus ps_operator_new(const struct PsComplex *entries, struct PsOperator **out);

// # Safety
// `op` must come from this library and not be freed twice. Null is ignored.
void ps_operator_free(struct PsOperator *op);

// Copies the 16 row-major entries into `out`.
//
// # Safety
// `op` must be a live handle; `out` must hold 16 values.
enum PsStatus ps_operator_entries(const struct PsOperator *op, struct PsComplex *out);

// `out = op · v` for complex `v[4]`.
//
// # Safety
// `v` and `out` must hold four values.
enum PsStatus ps_operator_apply(const struct PsOperator *op,
                                const struct PsComplex *v,
                                struct PsComplex *out);

// New handle holding `a · b`.
//
// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum PsStatus ps_operator_compose(const struct PsOperator *a,
                                  const struct PsOperator *b,
                                  struct PsOperator **out);

// New handle holding `exp(t · op)`.
//
// # Safety
// `op` must be a live handle; `out` must be writable.
enum PsStatus ps_operator_exp(const struct PsOperator *op, double t, struct PsOperator **out);

// Operator image of an angular generator such as `"M01"` in the representation
// `"spin1"`, `"spin_half_plus"` or `"spin_half_minus"`.
//
// # Safety
// `rep` and `label` must be NUL-terminated strings; `out` must be writable.
enum PsStatus ps_generator_image(const char *rep, const char *label, struct PsOperator **out);

// Basis operator `D_{αβ}` for `α, β` in `0..=3`.
//
// # Safety
// `out` must be writable.
enum PsStatus ps_d_basis(size_t alpha, size_t beta, struct PsOperator **out);

// Bilinear scalar product `η_{μν} a^μ b^ν`.
//
// # Safety
// `a`, `b` must hold four values; `out` must be writable.
enum PsStatus ps_scalar_product(const struct PsComplex *a,
                                const struct PsComplex *b,
                                struct PsComplex *out);

// Tri-product `{a, b, c}`.
//
// # Safety
// `a`, `b`, `c` and `out` must hold four values.
enum PsStatus ps_tri_product(const struct PsComplex *a,
                             const struct PsComplex *b,
                             const struct PsComplex *c,
                             struct PsComplex *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PHASESPACE_H */
