// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gacomb::verify {

struct Options {
  int max_n = 6;             // exhaustive product checks up to this width
  int trials = 1000;         // randomized trials per suite
  std::uint64_t seed = 42;
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::string detail;  // first mismatch or a short summary
};

/// Exhaustive comb-pair products up to max_n (capped at 6) plus randomized
/// pairs at width 10, checked against the transposition-counting oracle.
SuiteResult check_product_signs(const Options& opt);

/// Scalar vs SIMD batch kernels on random mask/coefficient rows; passes
/// trivially when only the scalar backend exists.
SuiteResult check_kernel_backends(const Options& opt);

/// Bit-level negate/sign gates against the literal bivector sandwich
/// formulas in the (n+2)-dimensional dense algebra, every comb (complex flag
/// included) for n up to min(max_n, 5).
SuiteResult check_sandwich_gates(const Options& opt);

/// Random circuits (n <= 4, depth <= 20) through the engine and the
/// state-vector simulator, compared through the correspondence map at 1e-10.
SuiteResult check_correspondence(const Options& opt);

/// Associativity of random sparse products with small integer coefficients,
/// exact equality.
SuiteResult check_associativity(const Options& opt);

std::vector<SuiteResult> run_all(const Options& opt);

}  // namespace gacomb::verify
