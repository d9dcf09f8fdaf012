// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace gacomb::kernels {

/// Sign of the product of two basis blades: (-1)^s where s counts the
/// generator pairs (k, l) with k < l, bit k set in the right factor and bit l
/// set in the left factor. Equivalently, s is the number of adjacent
/// transpositions needed to merge the two ascending generator sequences.
/// This is the scalar reference; every batch kernel must match it exactly.
inline int product_sign_ref(std::uint64_t lhs, std::uint64_t rhs) {
  int swaps = 0;
  std::uint64_t a = lhs >> 1;
  while (a != 0) {
    swaps += std::popcount(a & rhs);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

/// Word whose bit k holds the parity of the lhs bits strictly above k.
/// One fold of the fixed left factor turns the sign exponent into a masked
/// parity: sign parity == popcount(rhs & suffix_parity(lhs)) mod 2. This is
/// what lets a whole row of right-hand blades be processed per lane.
inline std::uint64_t suffix_parity(std::uint64_t lhs) {
  std::uint64_t s = lhs >> 1;
  s ^= s >> 1;
  s ^= s >> 2;
  s ^= s >> 4;
  s ^= s >> 8;
  s ^= s >> 16;
  s ^= s >> 32;
  return s;
}

/// Popcount parity of a word, 0 or 1.
inline std::uint64_t parity64(std::uint64_t x) {
  x ^= x >> 32;
  x ^= x >> 16;
  x ^= x >> 8;
  x ^= x >> 4;
  x ^= x >> 2;
  x ^= x >> 1;
  return x & 1;
}

enum class Backend { scalar, avx2, neon };

std::string_view backend_name(Backend backend);

/// The batch kernels behind multivector arithmetic. All variants compute
/// bit-identical results; they differ only in lane width.
struct Ops {
  /// One left term against a row of right terms:
  ///   out_masks[i]  = lhs_mask ^ rhs_masks[i]
  ///   out_coeffs[i] = sign(lhs_mask, rhs_masks[i]) * (lhs_coeff * rhs_coeffs[i])
  void (*product_row)(std::uint64_t lhs_mask, double lhs_coeff,
                      const std::uint64_t* rhs_masks, const double* rhs_coeffs,
                      std::size_t count, std::uint64_t* out_masks, double* out_coeffs);

  /// Flips the sign of every coefficient whose mask has the given (single)
  /// bit set. Backs the (-1)^{A_k} gate.
  void (*negate_where_bit)(std::uint64_t bit, const std::uint64_t* masks, double* coeffs,
                           std::size_t count);
};

/// Scalar reference kernels; always available.
const Ops& scalar_ops();

/// Kernel table for a backend, or nullptr when it is not compiled in or the
/// host CPU lacks the instruction set.
const Ops* ops_for(Backend backend);

/// Backends usable on this host, scalar first.
std::vector<Backend> available_backends();

/// Best supported backend; the GACOMB_KERNEL environment variable
/// (scalar|avx2|neon) overrides the choice when it names a usable backend.
Backend preferred_backend();

Backend active_backend();
const Ops& active_ops();

/// Forces a backend; returns false (leaving the current one) if unsupported.
bool set_active_backend(Backend backend);

}  // namespace gacomb::kernels
