// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "gacomb/gates.hpp"
#include "gacomb/multivector.hpp"

// Independent brute-force implementations used as ground truth. Everything
// here favors literal transcription over speed: the product sign is counted
// by explicit adjacent transpositions, the gates evaluate the bivector
// sandwich formulas by repeated products, and the hosted state-vector
// simulator cross-checks circuits through the real/imaginary correspondence.
// Complex numbers appear only in this module; the engine itself is real.
namespace gacomb::oracle {

/// Dense coefficient array over all 2^dim masks. Desk-scale by design.
struct DenseMultivector {
  explicit DenseMultivector(int dim_);

  int dim = 0;
  std::vector<double> coeffs;  // indexed by mask

  double& operator[](std::uint64_t mask) { return coeffs[mask]; }
  double operator[](std::uint64_t mask) const { return coeffs[mask]; }

  static DenseMultivector blade(int dim, std::uint64_t mask, double coeff = 1.0);
};

inline constexpr int kMaxDenseDims = 14;

/// Sign and result mask of a blade product, by merging the two ascending
/// generator sequences with adjacent transpositions and annihilating equal
/// neighbors. Independent of the engine's closed-form sign rule.
std::pair<int, std::uint64_t> blade_reorder(std::uint64_t lhs, std::uint64_t rhs);

DenseMultivector dense_product(const DenseMultivector& a, const DenseMultivector& b);
DenseMultivector dense_add(const DenseMultivector& a, const DenseMultivector& b);
DenseMultivector dense_scale(const DenseMultivector& a, double s);
DenseMultivector dense_reverse(const DenseMultivector& a);

/// Sparse -> dense over positions 0..n+1 (room for the complex flag and the
/// auxiliary generator regardless of the configuration flags).
DenseMultivector densify(const Multivector& m);

/// Dense -> sparse; masks outside the configuration's reserved positions
/// must be zero.
Multivector sparsify(const DenseMultivector& d, const AlgebraConfig& cfg);

enum class SandwichGate { neg, sign };

/// Literal evaluation of the bivector sandwich forms in the (n+2)-dimensional
/// algebra with a_j = b_j b_{n+1}:
///   neg:  b_k (a_0 ... a_{k-1})* z (a_0 ... a_{k-1})
///   sign: a_k* z a_k
/// z is indexed over positions 0..n+1; n is the data width.
DenseMultivector sandwich_gate(const DenseMultivector& z, int n, int k, SandwichGate which);

/// Amplitudes of |A_1...A_n> with A_1 the most significant index bit.
struct StateVector {
  explicit StateVector(int n_);

  int n = 0;
  std::vector<std::complex<double>> amps;  // 2^n entries

  static StateVector basis(int n, std::uint64_t index);
};

/// The real/imaginary split by the complex flag: the amplitude of
/// |A_1...A_n> is coeff(c_{0A}) + i coeff(c_{1A}). Requires the complex
/// bit; auxiliary positions must be unused.
StateVector correspondence(const Multivector& z);

/// Inverse of correspondence.
Multivector correspondence_inverse(const StateVector& s);

/// Standard matrix action of the unitary gate set (h, x, y, z, phase, t,
/// cnot, toffoli, global phase and global i). Projective and reset kinds are
/// rejected: they have no unitary counterpart here.
StateVector sv_apply(const StateVector& s, const GateOp& op);

StateVector sv_apply_circuit(const StateVector& s, const Circuit& c);

/// Max-norm distance between amplitude vectors.
double sv_max_diff(const StateVector& a, const StateVector& b);

}  // namespace gacomb::oracle
