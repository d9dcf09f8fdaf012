// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "gacomb/multivector.hpp"

namespace gacomb {

/// Counts multivector-level primitive applications: each bit negation, each
/// sign conjugation, each complex-structure application, each projection and
/// each reset bumps the count by one, independent of how many terms the state
/// has. A Hadamard therefore costs exactly 2 and a run of n Hadamards 2n.
struct OpCounter {
  std::uint64_t count = 0;
};

enum class GateKind {
  neg,           // flip bit k ("x")
  sign,          // multiply by (-1)^{A_k}
  proj,          // keep blades containing b_k
  had,           // Hadamard on bit k
  phase,         // phase factor e^{i phi} on blades containing b_k
  t,             // phase pi/4
  pauli_y,       // i after neg after sign ("y")
  pauli_z,       // alias of sign ("z")
  cnot,          // bit[1] flipped where bit[0] set
  toffoli,       // bit[2] flipped where bits[0] and [1] set
  reset,         // clear bit k, irreversible
  select,        // alias of proj (DSL surface)
  global_i,      // complex structure map on the whole state
  global_phase,  // e^{i phi} on the whole state
};

struct GateOp {
  GateKind kind{};
  std::array<int, 3> bits{0, 0, 0};
  double angle = 0.0;

  static GateOp neg(int k) { return {GateKind::neg, {k, 0, 0}, 0.0}; }
  static GateOp sign(int k) { return {GateKind::sign, {k, 0, 0}, 0.0}; }
  static GateOp proj(int k) { return {GateKind::proj, {k, 0, 0}, 0.0}; }
  static GateOp had(int k) { return {GateKind::had, {k, 0, 0}, 0.0}; }
  static GateOp phase(int k, double phi) { return {GateKind::phase, {k, 0, 0}, phi}; }
  static GateOp t(int k) { return {GateKind::t, {k, 0, 0}, 0.0}; }
  static GateOp pauli_y(int k) { return {GateKind::pauli_y, {k, 0, 0}, 0.0}; }
  static GateOp pauli_z(int k) { return {GateKind::pauli_z, {k, 0, 0}, 0.0}; }
  static GateOp cnot(int control, int target) {
    return {GateKind::cnot, {control, target, 0}, 0.0};
  }
  static GateOp toffoli(int c1, int c2, int target) {
    return {GateKind::toffoli, {c1, c2, target}, 0.0};
  }
  static GateOp reset(int k) { return {GateKind::reset, {k, 0, 0}, 0.0}; }
  static GateOp select(int k) { return {GateKind::select, {k, 0, 0}, 0.0}; }
  static GateOp global_i() { return {GateKind::global_i, {0, 0, 0}, 0.0}; }
  static GateOp global_phase(double phi) { return {GateKind::global_phase, {0, 0, 0}, phi}; }

  bool operator==(const GateOp&) const = default;
};

/// Number of bit indices the gate takes.
int gate_arity(GateKind kind);
bool gate_has_angle(GateKind kind);
std::string_view gate_mnemonic(GateKind kind);

/// Throws IndexError for indices outside 1..width or colliding control and
/// target bits.
void validate_gate(const GateOp& op, int width);

struct SourceSpan {
  int line = 0;
  int column = 0;
};

/// A declared bit width plus an ordered gate list. source_spans, when
/// non-empty, is parallel to ops and maps each op back into the DSL text.
struct Circuit {
  int width = 0;
  bool complex_bit = false;
  std::vector<GateOp> ops;
  std::vector<SourceSpan> source_spans;

  bool operator==(const Circuit& other) const {
    return width == other.width && complex_bit == other.complex_bit && ops == other.ops;
  }
};

// The elementary maps. Each is the linear extension of its action on combs;
// all are O(terms). The algebraic sandwich forms they are equivalent to live
// in the dense oracle as cross-checks. The optional counter records one
// primitive application when supplied.

/// Flip bit k of every mask, coefficients unchanged.
Multivector negate_bit(const Multivector& z, int k, OpCounter* ops = nullptr);

/// Multiply each coefficient by (-1)^(bit k of its mask).
Multivector sign_bit(const Multivector& z, int k, OpCounter* ops = nullptr);

/// Keep exactly the blades containing b_k; equals (z - sign_bit(z, k)) / 2.
Multivector project_bit(const Multivector& z, int k, OpCounter* ops = nullptr);

/// Keep exactly the blades not containing b_k.
Multivector project_bit_complement(const Multivector& z, int k, OpCounter* ops = nullptr);

/// (negate_bit(z, k) + sign_bit(z, k)) / sqrt(2); costs two primitives.
Multivector hadamard(const Multivector& z, int k, OpCounter* ops = nullptr);

/// Clear bit k of every mask, summing colliding coefficients. Irreversible.
Multivector reset_bit(const Multivector& z, int k, OpCounter* ops = nullptr);

/// z - P_k z + X(P_k z): applies X on the blades containing b_k and leaves
/// the rest alone. X must be linear with X(0) = 0.
template <typename X>
Multivector control_x(const Multivector& z, int k, X&& x, OpCounter* ops = nullptr) {
  Multivector kept = project_bit(z, k, ops);
  return add(sub(z, kept), x(kept));
}

/// Applies one gate; bumps the counter by the gate's primitive cost.
Multivector apply_gate(const Multivector& z, const GateOp& op, OpCounter* ops = nullptr);

/// Left-to-right application of the circuit. Rejects width mismatches and a
/// complex-marked circuit applied to a state without the complex flag.
std::pair<Multivector, OpCounter> apply_circuit(const Multivector& z, const Circuit& c);

}  // namespace gacomb
