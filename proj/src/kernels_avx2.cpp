// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

// AVX2 variants of the batch kernels, four 64-bit lanes at a time. The sign
// is a per-lane xor-fold parity of (rhs & suffix_parity(lhs)) shifted into
// the IEEE sign bit, so results are bit-identical to the scalar kernels.
// This file is compiled with AVX2 enabled; callers reach it only after a
// runtime cpuid check.

#include "gacomb/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace gacomb::kernels {

namespace {

inline double signed_product(std::uint64_t fold, std::uint64_t rhs_mask, double product) {
  return parity64(rhs_mask & fold) ? -product : product;
}

void product_row_avx2(std::uint64_t lhs_mask, double lhs_coeff, const std::uint64_t* rhs_masks,
                      const double* rhs_coeffs, std::size_t count, std::uint64_t* out_masks,
                      double* out_coeffs) {
  const std::uint64_t fold = suffix_parity(lhs_mask);
  const __m256i lhs_v = _mm256_set1_epi64x(static_cast<long long>(lhs_mask));
  const __m256i fold_v = _mm256_set1_epi64x(static_cast<long long>(fold));
  const __m256i one_v = _mm256_set1_epi64x(1);
  const __m256d lc_v = _mm256_set1_pd(lhs_coeff);

  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rhs_masks + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out_masks + i), _mm256_xor_si256(m, lhs_v));

    __m256i t = _mm256_and_si256(m, fold_v);
    t = _mm256_xor_si256(t, _mm256_srli_epi64(t, 32));
    t = _mm256_xor_si256(t, _mm256_srli_epi64(t, 16));
    t = _mm256_xor_si256(t, _mm256_srli_epi64(t, 8));
    t = _mm256_xor_si256(t, _mm256_srli_epi64(t, 4));
    t = _mm256_xor_si256(t, _mm256_srli_epi64(t, 2));
    t = _mm256_xor_si256(t, _mm256_srli_epi64(t, 1));
    __m256i sign = _mm256_slli_epi64(_mm256_and_si256(t, one_v), 63);

    __m256d prod = _mm256_mul_pd(lc_v, _mm256_loadu_pd(rhs_coeffs + i));
    prod = _mm256_xor_pd(prod, _mm256_castsi256_pd(sign));
    _mm256_storeu_pd(out_coeffs + i, prod);
  }
  for (; i < count; ++i) {
    out_masks[i] = lhs_mask ^ rhs_masks[i];
    out_coeffs[i] = signed_product(fold, rhs_masks[i], lhs_coeff * rhs_coeffs[i]);
  }
}

void negate_where_bit_avx2(std::uint64_t bit, const std::uint64_t* masks, double* coeffs,
                           std::size_t count) {
  const __m256i bit_v = _mm256_set1_epi64x(static_cast<long long>(bit));
  const __m256i sign_v = _mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ull));

  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + i));
    __m256i hit = _mm256_cmpeq_epi64(_mm256_and_si256(m, bit_v), bit_v);
    __m256i flip = _mm256_and_si256(hit, sign_v);
    __m256d c = _mm256_loadu_pd(coeffs + i);
    _mm256_storeu_pd(coeffs + i, _mm256_xor_pd(c, _mm256_castsi256_pd(flip)));
  }
  for (; i < count; ++i) {
    if (masks[i] & bit) coeffs[i] = -coeffs[i];
  }
}

constexpr Ops kAvx2Ops{&product_row_avx2, &negate_where_bit_avx2};

}  // namespace

const Ops* avx2_ops() { return &kAvx2Ops; }

}  // namespace gacomb::kernels

#endif  // x86_64
