// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "gacomb/algorithms.hpp"

#include <algorithm>
#include <numeric>

#include "gacomb/gates.hpp"

namespace gacomb {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

void RegisterLayout::validate(int n) const {
  int next = 1;
  for (const Register& reg : registers) {
    if (reg.lo != next || reg.hi < reg.lo) {
      throw ConfigError("register '" + reg.name + "' is not contiguous with its predecessor");
    }
    next = reg.hi + 1;
  }
  if (next - 1 > n) throw ConfigError("register layout exceeds the data width");
}

CombMask encode_int(std::uint64_t x, int width) {
  return encode_int(x, Register{"", 1, width});
}

CombMask encode_int(std::uint64_t x, const Register& reg) {
  const int w = reg.width();
  if (w < 1 || w > 62) throw ConfigError("register width outside 1..62");
  if (w < 62 && x >= (std::uint64_t{1} << w)) {
    throw ConfigError("value " + std::to_string(x) + " does not fit in " + std::to_string(w) +
                      " bits");
  }
  CombMask mask = 0;
  for (int j = 0; j < w; ++j) {
    if ((x >> (w - 1 - j)) & 1) mask |= CombMask{1} << (reg.lo + j);
  }
  return mask;
}

std::uint64_t decode_int(CombMask mask, const Register& reg) {
  std::uint64_t x = 0;
  for (int j = 0; j < reg.width(); ++j) {
    x = (x << 1) | ((mask >> (reg.lo + j)) & 1);
  }
  return x;
}

Multivector bell(BellState which) {
  const AlgebraConfig cfg(2);
  const CombMask b1 = 1 << 1;
  const CombMask b2 = 1 << 2;
  switch (which) {
    case BellState::psi_plus:
      return Multivector::from_terms(cfg, {{b2, kInvSqrt2}, {b1, kInvSqrt2}});
    case BellState::psi_minus:
      return Multivector::from_terms(cfg, {{b2, kInvSqrt2}, {b1, -kInvSqrt2}});
    case BellState::phi_plus:
      return Multivector::from_terms(cfg, {{0, kInvSqrt2}, {b1 | b2, kInvSqrt2}});
    case BellState::phi_minus:
      return Multivector::from_terms(cfg, {{0, kInvSqrt2}, {b1 | b2, -kInvSqrt2}});
  }
  throw Error("bell: unknown state");
}

Multivector ghz() {
  const AlgebraConfig cfg(3);
  return Multivector::from_terms(cfg, {{0, kInvSqrt2}, {0b1110, kInvSqrt2}});
}

Multivector hadamard_state(int n) {
  if (n < 1 || n > kMaxHadamardWidth) {
    throw ConfigError("hadamard_state width outside 1.." + std::to_string(kMaxHadamardWidth));
  }
  const AlgebraConfig cfg(n);
  Multivector state = Multivector::vacuum(cfg);
  for (int k = 1; k <= n; ++k) {
    state = geometric_product(
        state, Multivector::from_terms(cfg, {{0, 1.0}, {CombMask{1} << k, 1.0}}));
  }
  // Normalize with the same fold of 1/sqrt(2) factors a gate-by-gate
  // Hadamard run performs, so the two routes agree bit-for-bit.
  double norm = 1.0;
  for (int k = 0; k < n; ++k) norm *= kInvSqrt2;
  return scale(state, norm);
}

Shor15Result shor15(int base) {
  if (base < 2 || base > 14 || std::gcd(base, 15) != 1) {
    throw ConfigError("shor15: base " + std::to_string(base) + " is not coprime to 15 in 2..14");
  }

  const AlgebraConfig cfg(8);
  const Register x_reg{"x", 1, 4};
  const Register f_reg{"f", 5, 8};

  // Oracle state: sum over x of c_x c_(base^x mod 15). The two registers are
  // disjoint with x below f, so each product is a plain mask union.
  std::vector<Term> terms;
  int value = 1;
  for (int x = 0; x < 16; ++x) {
    terms.push_back({encode_int(static_cast<std::uint64_t>(x), x_reg) |
                         encode_int(static_cast<std::uint64_t>(value), f_reg),
                     1.0});
    value = value * base % 15;
  }
  Multivector oracle_state = Multivector::from_terms(cfg, std::move(terms));

  // Keep the blades whose value register reads 1 (bits 5-8 = 0001): three
  // complement projections and one projection.
  Multivector selected = project_bit_complement(oracle_state, 5);
  selected = project_bit_complement(selected, 6);
  selected = project_bit_complement(selected, 7);
  selected = project_bit(selected, 8);

  Shor15Result result;
  for (std::size_t i = 0; i < selected.term_count(); ++i) {
    result.selected_x.push_back(static_cast<int>(decode_int(selected.mask_at(i), x_reg)));
  }
  std::sort(result.selected_x.begin(), result.selected_x.end());

  int period = 0;
  for (int x : result.selected_x) {
    if (x > 0) {
      period = x;
      break;
    }
  }
  if (period == 0) throw Error("shor15: no surviving blade with x > 0");
  result.period = period;

  if (period % 2 != 0) {
    throw Error("shor15: period " + std::to_string(period) + " is odd, no factor shortcut");
  }
  int half = 1;
  for (int i = 0; i < period / 2; ++i) half = half * base % 15;
  result.factors = {std::gcd(half - 1, 15), std::gcd(half + 1, 15)};
  if (result.factors.first > result.factors.second) {
    std::swap(result.factors.first, result.factors.second);
  }

  result.trace.push_back(std::move(oracle_state));
  result.trace.push_back(std::move(selected));
  return result;
}

}  // namespace gacomb
