// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

// NEON variants of the batch kernels, two 64-bit lanes at a time. Mirrors
// the AVX2 file: xor-fold parity of (rhs & suffix_parity(lhs)) moved into
// the IEEE sign bit, bit-identical to the scalar kernels.

#include "gacomb/kernels.hpp"

#if defined(__aarch64__) || defined(_M_ARM64)

#include <arm_neon.h>

namespace gacomb::kernels {

namespace {

inline double signed_product(std::uint64_t fold, std::uint64_t rhs_mask, double product) {
  return parity64(rhs_mask & fold) ? -product : product;
}

void product_row_neon(std::uint64_t lhs_mask, double lhs_coeff, const std::uint64_t* rhs_masks,
                      const double* rhs_coeffs, std::size_t count, std::uint64_t* out_masks,
                      double* out_coeffs) {
  const std::uint64_t fold = suffix_parity(lhs_mask);
  const uint64x2_t lhs_v = vdupq_n_u64(lhs_mask);
  const uint64x2_t fold_v = vdupq_n_u64(fold);
  const uint64x2_t one_v = vdupq_n_u64(1);
  const float64x2_t lc_v = vdupq_n_f64(lhs_coeff);

  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    uint64x2_t m = vld1q_u64(rhs_masks + i);
    vst1q_u64(out_masks + i, veorq_u64(m, lhs_v));

    uint64x2_t t = vandq_u64(m, fold_v);
    t = veorq_u64(t, vshrq_n_u64(t, 32));
    t = veorq_u64(t, vshrq_n_u64(t, 16));
    t = veorq_u64(t, vshrq_n_u64(t, 8));
    t = veorq_u64(t, vshrq_n_u64(t, 4));
    t = veorq_u64(t, vshrq_n_u64(t, 2));
    t = veorq_u64(t, vshrq_n_u64(t, 1));
    uint64x2_t sign = vshlq_n_u64(vandq_u64(t, one_v), 63);

    float64x2_t prod = vmulq_f64(lc_v, vld1q_f64(rhs_coeffs + i));
    prod = vreinterpretq_f64_u64(veorq_u64(vreinterpretq_u64_f64(prod), sign));
    vst1q_f64(out_coeffs + i, prod);
  }
  for (; i < count; ++i) {
    out_masks[i] = lhs_mask ^ rhs_masks[i];
    out_coeffs[i] = signed_product(fold, rhs_masks[i], lhs_coeff * rhs_coeffs[i]);
  }
}

void negate_where_bit_neon(std::uint64_t bit, const std::uint64_t* masks, double* coeffs,
                           std::size_t count) {
  const uint64x2_t bit_v = vdupq_n_u64(bit);
  const uint64x2_t sign_v = vdupq_n_u64(0x8000000000000000ull);

  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    uint64x2_t m = vld1q_u64(masks + i);
    uint64x2_t hit = vceqq_u64(vandq_u64(m, bit_v), bit_v);
    uint64x2_t flip = vandq_u64(hit, sign_v);
    float64x2_t c = vld1q_f64(coeffs + i);
    vst1q_f64(coeffs + i, vreinterpretq_f64_u64(veorq_u64(vreinterpretq_u64_f64(c), flip)));
  }
  for (; i < count; ++i) {
    if (masks[i] & bit) coeffs[i] = -coeffs[i];
  }
}

constexpr Ops kNeonOps{&product_row_neon, &negate_where_bit_neon};

}  // namespace

const Ops* neon_ops() { return &kNeonOps; }

}  // namespace gacomb::kernels

#endif  // aarch64
