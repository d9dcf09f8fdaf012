// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "gacomb/gates.hpp"

#include <cmath>
#include <numbers>

#include "gacomb/kernels.hpp"

namespace gacomb {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_data_bit(const Multivector& z, int k, const char* op) {
  if (k < 1 || k > z.dim()) {
    throw IndexError(std::string(op) + ": bit index " + std::to_string(k) + " outside 1.." +
                     std::to_string(z.dim()));
  }
}

void bump(OpCounter* ops) {
  if (ops) ++ops->count;
}

Multivector counted_complex_i(const Multivector& z, OpCounter* ops) {
  bump(ops);
  return complex_i(z);
}

// cos(phi) z + sin(phi) i z, counting the one complex-structure application.
Multivector counted_phase_rotate(const Multivector& z, double phi, OpCounter* ops) {
  return add(scale(z, std::cos(phi)), scale(counted_complex_i(z, ops), std::sin(phi)));
}

}  // namespace

int gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::cnot:
      return 2;
    case GateKind::toffoli:
      return 3;
    case GateKind::global_i:
    case GateKind::global_phase:
      return 0;
    default:
      return 1;
  }
}

bool gate_has_angle(GateKind kind) {
  return kind == GateKind::phase || kind == GateKind::global_phase;
}

std::string_view gate_mnemonic(GateKind kind) {
  switch (kind) {
    case GateKind::neg: return "x";
    case GateKind::sign: return "z";
    case GateKind::proj: return "select";
    case GateKind::had: return "h";
    case GateKind::phase: return "phase";
    case GateKind::t: return "t";
    case GateKind::pauli_y: return "y";
    case GateKind::pauli_z: return "z";
    case GateKind::cnot: return "cnot";
    case GateKind::toffoli: return "toffoli";
    case GateKind::reset: return "reset";
    case GateKind::select: return "select";
    case GateKind::global_i: return "i";
    case GateKind::global_phase: return "gphase";
  }
  return "?";
}

void validate_gate(const GateOp& op, int width) {
  const int arity = gate_arity(op.kind);
  for (int i = 0; i < arity; ++i) {
    if (op.bits[i] < 1 || op.bits[i] > width) {
      throw IndexError("gate '" + std::string(gate_mnemonic(op.kind)) + "': bit index " +
                       std::to_string(op.bits[i]) + " outside 1.." + std::to_string(width));
    }
    for (int j = 0; j < i; ++j) {
      if (op.bits[i] == op.bits[j]) {
        throw IndexError("gate '" + std::string(gate_mnemonic(op.kind)) +
                         "': duplicate bit index " + std::to_string(op.bits[i]));
      }
    }
  }
}

Multivector negate_bit(const Multivector& z, int k, OpCounter* ops) {
  require_data_bit(z, k, "negate_bit");
  bump(ops);
  const CombMask bit = CombMask{1} << k;
  std::vector<Term> terms;
  terms.reserve(z.term_count());
  for (std::size_t i = 0; i < z.term_count(); ++i) {
    terms.push_back({z.mask_at(i) ^ bit, z.coeff_at(i)});
  }
  return Multivector::from_terms(z.config(), std::move(terms));
}

Multivector sign_bit(const Multivector& z, int k, OpCounter* ops) {
  require_data_bit(z, k, "sign_bit");
  bump(ops);
  std::vector<CombMask> masks(z.masks().begin(), z.masks().end());
  std::vector<double> coeffs(z.coeffs().begin(), z.coeffs().end());
  kernels::active_ops().negate_where_bit(CombMask{1} << k, masks.data(), coeffs.data(),
                                         coeffs.size());
  std::vector<Term> terms(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) terms[i] = {masks[i], coeffs[i]};
  return Multivector::from_terms(z.config(), std::move(terms));
}

Multivector project_bit(const Multivector& z, int k, OpCounter* ops) {
  require_data_bit(z, k, "project_bit");
  bump(ops);
  const CombMask bit = CombMask{1} << k;
  std::vector<Term> terms;
  for (std::size_t i = 0; i < z.term_count(); ++i) {
    if (z.mask_at(i) & bit) terms.push_back({z.mask_at(i), z.coeff_at(i)});
  }
  return Multivector::from_terms(z.config(), std::move(terms));
}

Multivector project_bit_complement(const Multivector& z, int k, OpCounter* ops) {
  require_data_bit(z, k, "project_bit_complement");
  bump(ops);
  const CombMask bit = CombMask{1} << k;
  std::vector<Term> terms;
  for (std::size_t i = 0; i < z.term_count(); ++i) {
    if (!(z.mask_at(i) & bit)) terms.push_back({z.mask_at(i), z.coeff_at(i)});
  }
  return Multivector::from_terms(z.config(), std::move(terms));
}

Multivector hadamard(const Multivector& z, int k, OpCounter* ops) {
  require_data_bit(z, k, "hadamard");
  return scale(add(negate_bit(z, k, ops), sign_bit(z, k, ops)), kInvSqrt2);
}

Multivector reset_bit(const Multivector& z, int k, OpCounter* ops) {
  require_data_bit(z, k, "reset_bit");
  bump(ops);
  const CombMask bit = CombMask{1} << k;
  std::vector<Term> terms;
  terms.reserve(z.term_count());
  for (std::size_t i = 0; i < z.term_count(); ++i) {
    terms.push_back({z.mask_at(i) & ~bit, z.coeff_at(i)});
  }
  return Multivector::from_terms(z.config(), std::move(terms));
}

Multivector apply_gate(const Multivector& z, const GateOp& op, OpCounter* ops) {
  validate_gate(op, z.dim());
  switch (op.kind) {
    case GateKind::neg:
      return negate_bit(z, op.bits[0], ops);
    case GateKind::sign:
    case GateKind::pauli_z:
      return sign_bit(z, op.bits[0], ops);
    case GateKind::proj:
    case GateKind::select:
      return project_bit(z, op.bits[0], ops);
    case GateKind::had:
      return hadamard(z, op.bits[0], ops);
    case GateKind::phase:
      return control_x(
          z, op.bits[0], [&](const Multivector& m) { return counted_phase_rotate(m, op.angle, ops); },
          ops);
    case GateKind::t:
      return apply_gate(z, GateOp::phase(op.bits[0], std::numbers::pi / 4), ops);
    case GateKind::pauli_y:
      return counted_complex_i(negate_bit(sign_bit(z, op.bits[0], ops), op.bits[0], ops), ops);
    case GateKind::cnot:
      return control_x(
          z, op.bits[0], [&](const Multivector& m) { return negate_bit(m, op.bits[1], ops); },
          ops);
    case GateKind::toffoli:
      return control_x(
          z, op.bits[0],
          [&](const Multivector& m) {
            return control_x(
                m, op.bits[1],
                [&](const Multivector& inner) { return negate_bit(inner, op.bits[2], ops); }, ops);
          },
          ops);
    case GateKind::reset:
      return reset_bit(z, op.bits[0], ops);
    case GateKind::global_i:
      return counted_complex_i(z, ops);
    case GateKind::global_phase:
      return counted_phase_rotate(z, op.angle, ops);
  }
  throw Error("apply_gate: unknown gate kind");
}

std::pair<Multivector, OpCounter> apply_circuit(const Multivector& z, const Circuit& c) {
  if (z.dim() != c.width) {
    throw WidthMismatchError("apply_circuit: state width " + std::to_string(z.dim()) +
                             " != circuit width " + std::to_string(c.width));
  }
  if (c.complex_bit && !z.config().complex_bit) {
    throw ConfigError("apply_circuit: circuit needs the complex flag position");
  }
  OpCounter counter;
  Multivector state = z;
  for (const GateOp& op : c.ops) state = apply_gate(state, op, &counter);
  return {std::move(state), counter};
}

}  // namespace gacomb
