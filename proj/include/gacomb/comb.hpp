// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gacomb {

/// A basis blade in binary parametrization. Bit k of the mask is set iff
/// generator b_k occurs in the blade: position 0 is the complex flag,
/// positions 1..n are the data bits, position n+1 is the gate-auxiliary
/// dimension. The empty mask is the algebra unit.
using CombMask = std::uint64_t;

/// Base class for all algebra errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in algebras of different width or reserved positions.
class WidthMismatchError : public Error {
 public:
  using Error::Error;
};

/// An operation needs a reserved position the algebra does not have.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A bit index lies outside the declared data range 1..n.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Prefix factorization preconditions are violated.
class FactorError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (MVTX lines, bitstrings, eval expressions).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Masks must fit one machine word with room for the two reserved positions.
inline constexpr int kMaxTotalDims = 62;

/// Declares which positions of a comb mask are in use: n data bits at
/// positions 1..n, optionally the complex flag at position 0 and the
/// gate-auxiliary generator at position n+1. Data bits always occupy
/// positions 1..n so enabling the extra positions never relabels a mask.
struct AlgebraConfig {
  int n = 1;
  bool complex_bit = false;
  bool aux_bit = false;

  AlgebraConfig() = default;
  AlgebraConfig(int n_, bool complex_bit_ = false, bool aux_bit_ = false);

  int total_dims() const { return n + (complex_bit ? 1 : 0) + (aux_bit ? 1 : 0); }
  int lowest_position() const { return complex_bit ? 0 : 1; }
  int aux_position() const { return n + 1; }

  /// Every mask position this algebra may populate.
  CombMask allowed_mask() const;

  bool operator==(const AlgebraConfig&) const = default;
};

inline bool mask_valid(const AlgebraConfig& cfg, CombMask mask) {
  return (mask & ~cfg.allowed_mask()) == 0;
}

/// Number of generators in the blade.
inline int grade(CombMask mask) { return std::popcount(mask); }

/// Renders a mask as the bitstring A_0 A_1 ... (leftmost character is the
/// lowest reserved position; the aux position is rightmost when enabled).
std::string format_mask(const AlgebraConfig& cfg, CombMask mask);

/// Inverse of format_mask. Throws FormatError on wrong length or characters
/// other than 0/1.
CombMask parse_mask(const AlgebraConfig& cfg, std::string_view bits);

/// Coefficient formatting used by the CLI and scene labels: integers print
/// without a decimal point, everything else with the shortest decimal that
/// round-trips.
std::string format_coeff(double value);

}  // namespace gacomb
