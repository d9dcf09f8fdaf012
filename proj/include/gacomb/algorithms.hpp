// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gacomb/multivector.hpp"

namespace gacomb {

/// A contiguous run of data-bit positions lo..hi. The bit with the lowest
/// index is the most significant: c_0100... decodes to 4 in a 4-bit register.
/// This is the single place register endianness is fixed.
struct Register {
  std::string name;
  int lo = 1;
  int hi = 1;

  int width() const { return hi - lo + 1; }
};

struct RegisterLayout {
  std::vector<Register> registers;

  /// Ranges must be disjoint, contiguous, ascending and within 1..n.
  void validate(int n) const;
};

/// MSB-first encoding of x into data positions 1..width. Throws on overflow.
CombMask encode_int(std::uint64_t x, int width);

/// MSB-first encoding into the register's position range.
CombMask encode_int(std::uint64_t x, const Register& reg);

/// Reads the register's bits out of a mask.
std::uint64_t decode_int(CombMask mask, const Register& reg);

enum class BellState { psi_plus, psi_minus, phi_plus, phi_minus };

/// The four 2-bit Bell multivectors: psi_pm = (b2 pm b1)/sqrt(2),
/// phi_pm = (1 pm b1 b2)/sqrt(2). Mutually orthonormal under the scalar
/// product.
Multivector bell(BellState which);

/// The 3-bit GHZ multivector (1 + b1 b2 b3)/sqrt(2).
Multivector ghz();

/// 2^(-n/2) (1 + b1)(1 + b2)...(1 + bn): the uniform superposition of all
/// 2^n combs, built by n successive geometric products. Matches a circuit of
/// n Hadamards on the vacuum coefficient-for-coefficient.
Multivector hadamard_state(int n);

inline constexpr int kMaxHadamardWidth = 20;

/// Period finding for a^x mod 15 without a Fourier transform: build the
/// correlated multivector sum_x c_x c_(a^x mod 15) on 8 data bits (x in
/// positions 1-4, value in positions 5-8), select the blades whose value
/// register equals 1 with four single-bit projections, and read the smallest
/// surviving x > 0 off the x register.
struct Shor15Result {
  int period = 0;
  std::pair<int, int> factors{0, 0};
  std::vector<int> selected_x;      // decoded x registers of surviving blades
  std::vector<Multivector> trace;   // [0] oracle state, [1] post-selection state
};

/// base must be coprime to 15 (one of 2, 4, 7, 8, 11, 13, 14).
Shor15Result shor15(int base);

}  // namespace gacomb
