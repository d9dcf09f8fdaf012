// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "gacomb/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gacomb::oracle {

namespace {

void require_dense_dim(int dim) {
  if (dim < 1 || dim > kMaxDenseDims) {
    throw ConfigError("dense oracle dimension " + std::to_string(dim) + " outside 1.." +
                      std::to_string(kMaxDenseDims));
  }
}

}  // namespace

DenseMultivector::DenseMultivector(int dim_) : dim(dim_) {
  require_dense_dim(dim);
  coeffs.assign(std::size_t{1} << dim, 0.0);
}

DenseMultivector DenseMultivector::blade(int dim, std::uint64_t mask, double coeff) {
  DenseMultivector out(dim);
  out.coeffs.at(mask) = coeff;
  return out;
}

std::pair<int, std::uint64_t> blade_reorder(std::uint64_t lhs, std::uint64_t rhs) {
  // Concatenate the two ascending generator sequences.
  std::vector<int> gens;
  for (int k = 0; k < 64; ++k) {
    if ((lhs >> k) & 1) gens.push_back(k);
  }
  for (int k = 0; k < 64; ++k) {
    if ((rhs >> k) & 1) gens.push_back(k);
  }

  // Sort by adjacent transpositions, counting each swap of distinct
  // generators as one sign flip.
  int swaps = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t j = 0; j + 1 < gens.size(); ++j) {
      if (gens[j] > gens[j + 1]) {
        std::swap(gens[j], gens[j + 1]);
        ++swaps;
        moved = true;
      }
    }
  }

  // Equal generators are now adjacent; each pair annihilates to +1. Masks
  // carry each generator at most twice, so one pass suffices.
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < gens.size();) {
    if (j + 1 < gens.size() && gens[j] == gens[j + 1]) {
      j += 2;
    } else {
      mask |= std::uint64_t{1} << gens[j];
      ++j;
    }
  }
  return {(swaps & 1) ? -1 : 1, mask};
}

DenseMultivector dense_product(const DenseMultivector& a, const DenseMultivector& b) {
  if (a.dim != b.dim) throw WidthMismatchError("dense_product: dimension mismatch");
  DenseMultivector out(a.dim);
  const std::uint64_t size = std::uint64_t{1} << a.dim;
  for (std::uint64_t ma = 0; ma < size; ++ma) {
    if (a[ma] == 0.0) continue;
    for (std::uint64_t mb = 0; mb < size; ++mb) {
      if (b[mb] == 0.0) continue;
      auto [sign, mask] = blade_reorder(ma, mb);
      out[mask] += sign * a[ma] * b[mb];
    }
  }
  return out;
}

DenseMultivector dense_add(const DenseMultivector& a, const DenseMultivector& b) {
  if (a.dim != b.dim) throw WidthMismatchError("dense_add: dimension mismatch");
  DenseMultivector out(a.dim);
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = a.coeffs[i] + b.coeffs[i];
  return out;
}

DenseMultivector dense_scale(const DenseMultivector& a, double s) {
  DenseMultivector out(a.dim);
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = a.coeffs[i] * s;
  return out;
}

DenseMultivector dense_reverse(const DenseMultivector& a) {
  DenseMultivector out(a.dim);
  for (std::size_t mask = 0; mask < a.coeffs.size(); ++mask) {
    const int g = std::popcount(mask);
    out.coeffs[mask] = ((g * (g - 1) / 2) & 1) ? -a.coeffs[mask] : a.coeffs[mask];
  }
  return out;
}

DenseMultivector densify(const Multivector& m) {
  const int dim = m.dim() + 2;
  DenseMultivector out(dim);
  for (std::size_t i = 0; i < m.term_count(); ++i) out[m.mask_at(i)] = m.coeff_at(i);
  return out;
}

Multivector sparsify(const DenseMultivector& d, const AlgebraConfig& cfg) {
  std::vector<Term> terms;
  for (std::uint64_t mask = 0; mask < d.coeffs.size(); ++mask) {
    if (d[mask] == 0.0) continue;
    terms.push_back({mask, d[mask]});
  }
  return Multivector::from_terms(cfg, std::move(terms));
}

DenseMultivector sandwich_gate(const DenseMultivector& z, int n, int k, SandwichGate which) {
  if (z.dim != n + 2) throw WidthMismatchError("sandwich_gate: need the n+2 dimensional algebra");
  if (k < 1 || k > n) throw IndexError("sandwich_gate: bit index out of range");
  const int aux = n + 1;
  auto a_j = [&](int j) {
    return DenseMultivector::blade(z.dim, (std::uint64_t{1} << j) | (std::uint64_t{1} << aux));
  };

  if (which == SandwichGate::sign) {
    const DenseMultivector ak = a_j(k);
    return dense_product(dense_product(dense_reverse(ak), z), ak);
  }

  // neg: b_k (a_0 a_1 ... a_{k-1})* z (a_0 a_1 ... a_{k-1})
  DenseMultivector chain = a_j(0);
  for (int j = 1; j < k; ++j) chain = dense_product(chain, a_j(j));
  const DenseMultivector bk = DenseMultivector::blade(z.dim, std::uint64_t{1} << k);
  DenseMultivector out = dense_product(dense_reverse(chain), z);
  out = dense_product(out, chain);
  return dense_product(bk, out);
}

StateVector::StateVector(int n_) : n(n_) {
  if (n < 1 || n > 20) throw ConfigError("state vector width outside 1..20");
  amps.assign(std::size_t{1} << n, {0.0, 0.0});
}

StateVector StateVector::basis(int n, std::uint64_t index) {
  StateVector out(n);
  out.amps.at(index) = {1.0, 0.0};
  return out;
}

namespace {

// Index bit of qubit k (1-based, A_1 most significant).
inline int qubit_bit(std::uint64_t index, int n, int k) {
  return static_cast<int>((index >> (n - k)) & 1);
}

inline std::uint64_t flip_qubit(std::uint64_t index, int n, int k) {
  return index ^ (std::uint64_t{1} << (n - k));
}

}  // namespace

StateVector correspondence(const Multivector& z) {
  if (!z.config().complex_bit) {
    throw ConfigError("correspondence: state has no complex flag position");
  }
  const int n = z.dim();
  StateVector out(n);
  for (std::size_t i = 0; i < z.term_count(); ++i) {
    const CombMask mask = z.mask_at(i);
    if (z.config().aux_bit && ((mask >> z.config().aux_position()) & 1)) {
      throw ConfigError("correspondence: auxiliary position is set in a state term");
    }
    std::uint64_t index = 0;
    for (int k = 1; k <= n; ++k) {
      if ((mask >> k) & 1) index |= std::uint64_t{1} << (n - k);
    }
    if (mask & 1) {
      out.amps[index].imag(z.coeff_at(i));
    } else {
      out.amps[index].real(z.coeff_at(i));
    }
  }
  return out;
}

Multivector correspondence_inverse(const StateVector& s) {
  AlgebraConfig cfg(s.n, /*complex_bit=*/true);
  std::vector<Term> terms;
  for (std::uint64_t index = 0; index < s.amps.size(); ++index) {
    CombMask mask = 0;
    for (int k = 1; k <= s.n; ++k) {
      if ((index >> (s.n - k)) & 1) mask |= CombMask{1} << k;
    }
    const std::complex<double> amp = s.amps[index];
    if (amp.real() != 0.0) terms.push_back({mask, amp.real()});
    if (amp.imag() != 0.0) terms.push_back({mask | 1, amp.imag()});
  }
  return Multivector::from_terms(cfg, std::move(terms));
}

StateVector sv_apply(const StateVector& s, const GateOp& op) {
  using cd = std::complex<double>;
  const cd i1(0.0, 1.0);
  StateVector out = s;
  const int n = s.n;
  validate_gate(op, n);

  auto one_qubit = [&](int k, cd m00, cd m01, cd m10, cd m11) {
    StateVector next(n);
    for (std::uint64_t idx = 0; idx < s.amps.size(); ++idx) {
      const cd amp = out.amps[idx];
      if (amp == cd{}) continue;
      if (qubit_bit(idx, n, k) == 0) {
        next.amps[idx] += m00 * amp;
        next.amps[flip_qubit(idx, n, k)] += m10 * amp;
      } else {
        next.amps[flip_qubit(idx, n, k)] += m01 * amp;
        next.amps[idx] += m11 * amp;
      }
    }
    out = std::move(next);
  };

  const double r = std::numbers::sqrt2 / 2;
  switch (op.kind) {
    case GateKind::had:
      one_qubit(op.bits[0], r, r, r, -r);
      break;
    case GateKind::neg:
      one_qubit(op.bits[0], 0, 1, 1, 0);
      break;
    case GateKind::pauli_y:
      one_qubit(op.bits[0], 0, -i1, i1, 0);
      break;
    case GateKind::sign:
    case GateKind::pauli_z:
      one_qubit(op.bits[0], 1, 0, 0, -1);
      break;
    case GateKind::phase:
      one_qubit(op.bits[0], 1, 0, 0, std::exp(i1 * op.angle));
      break;
    case GateKind::t:
      one_qubit(op.bits[0], 1, 0, 0, std::exp(i1 * (std::numbers::pi / 4)));
      break;
    case GateKind::cnot:
      for (std::uint64_t idx = 0; idx < s.amps.size(); ++idx) {
        if (qubit_bit(idx, n, op.bits[0]) == 1 && qubit_bit(idx, n, op.bits[1]) == 0) {
          std::swap(out.amps[idx], out.amps[flip_qubit(idx, n, op.bits[1])]);
        }
      }
      break;
    case GateKind::toffoli:
      for (std::uint64_t idx = 0; idx < s.amps.size(); ++idx) {
        if (qubit_bit(idx, n, op.bits[0]) == 1 && qubit_bit(idx, n, op.bits[1]) == 1 &&
            qubit_bit(idx, n, op.bits[2]) == 0) {
          std::swap(out.amps[idx], out.amps[flip_qubit(idx, n, op.bits[2])]);
        }
      }
      break;
    case GateKind::global_i:
      for (auto& amp : out.amps) amp *= i1;
      break;
    case GateKind::global_phase:
      for (auto& amp : out.amps) amp *= std::exp(i1 * op.angle);
      break;
    default:
      throw Error("sv_apply: gate '" + std::string(gate_mnemonic(op.kind)) +
                  "' has no state-vector counterpart");
  }
  return out;
}

StateVector sv_apply_circuit(const StateVector& s, const Circuit& c) {
  if (s.n != c.width) throw WidthMismatchError("sv_apply_circuit: width mismatch");
  StateVector out = s;
  for (const GateOp& op : c.ops) out = sv_apply(out, op);
  return out;
}

double sv_max_diff(const StateVector& a, const StateVector& b) {
  if (a.n != b.n) throw WidthMismatchError("sv_max_diff: width mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.amps.size(); ++i) {
    worst = std::max(worst, std::abs(a.amps[i] - b.amps[i]));
  }
  return worst;
}

}  // namespace gacomb::oracle
