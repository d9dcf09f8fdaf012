// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "gacomb/verify.hpp"

#include <algorithm>
#include <random>

#include "gacomb/dsl.hpp"
#include "gacomb/gates.hpp"
#include "gacomb/kernels.hpp"
#include "gacomb/multivector.hpp"
#include "gacomb/oracle.hpp"

namespace gacomb::verify {

namespace {

std::string mask_pair(std::uint64_t a, std::uint64_t b) {
  return "lhs=" + std::to_string(a) + " rhs=" + std::to_string(b);
}

bool check_pair(std::uint64_t a, std::uint64_t b, SuiteResult& result) {
  auto [want_sign, want_mask] = oracle::blade_reorder(a, b);
  const int got_sign = kernels::product_sign_ref(a, b);
  if (want_sign != got_sign || want_mask != (a ^ b)) {
    result.pass = false;
    result.detail = "sign/mask mismatch at " + mask_pair(a, b);
    return false;
  }
  return true;
}

Multivector random_multivector(std::mt19937_64& rng, const AlgebraConfig& cfg, int max_terms) {
  std::uniform_int_distribution<int> term_count(1, max_terms);
  std::uniform_int_distribution<std::uint64_t> mask_dist(0, cfg.allowed_mask());
  std::uniform_int_distribution<int> coeff_dist(0, 3);
  static constexpr double kCoeffs[4] = {-2.0, -1.0, 1.0, 2.0};
  std::vector<Term> terms;
  const int count = term_count(rng);
  for (int i = 0; i < count; ++i) {
    terms.push_back({mask_dist(rng) & cfg.allowed_mask(), kCoeffs[coeff_dist(rng)]});
  }
  return Multivector::from_terms(cfg, std::move(terms));
}

}  // namespace

SuiteResult check_product_signs(const Options& opt) {
  SuiteResult result{"product-signs-vs-dense-oracle", true, ""};
  const int exhaustive_n = std::min(opt.max_n, 6);
  // Exhaustive over data-bit combs: positions 1..n.
  const std::uint64_t size = std::uint64_t{1} << exhaustive_n;
  std::uint64_t pairs = 0;
  for (std::uint64_t a = 0; a < size; ++a) {
    for (std::uint64_t b = 0; b < size; ++b) {
      if (!check_pair(a << 1, b << 1, result)) return result;
      ++pairs;
    }
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << 10) - 1);
  for (int t = 0; t < opt.trials; ++t) {
    if (!check_pair(dist(rng) << 1, dist(rng) << 1, result)) return result;
    ++pairs;
  }
  result.detail = std::to_string(pairs) + " comb pairs";
  return result;
}

SuiteResult check_kernel_backends(const Options& opt) {
  SuiteResult result{"kernel-backend-equivalence", true, ""};
  const auto backends = kernels::available_backends();
  if (backends.size() == 1) {
    result.detail = "only the scalar backend is available";
    return result;
  }

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint64_t> mask_dist(0, ~std::uint64_t{0} >> 2);
  std::uniform_real_distribution<double> coeff_dist(-4.0, 4.0);
  std::uniform_int_distribution<int> len_dist(0, 37);
  std::uniform_int_distribution<int> bit_dist(0, 61);

  for (int t = 0; t < opt.trials; ++t) {
    const std::size_t len = static_cast<std::size_t>(len_dist(rng));
    std::vector<std::uint64_t> rhs_masks(len);
    std::vector<double> rhs_coeffs(len);
    for (std::size_t i = 0; i < len; ++i) {
      rhs_masks[i] = mask_dist(rng);
      rhs_coeffs[i] = coeff_dist(rng);
    }
    const std::uint64_t lhs_mask = mask_dist(rng);
    const double lhs_coeff = coeff_dist(rng);

    std::vector<std::uint64_t> want_masks(len), got_masks(len);
    std::vector<double> want_coeffs(len), got_coeffs(len);
    kernels::scalar_ops().product_row(lhs_mask, lhs_coeff, rhs_masks.data(), rhs_coeffs.data(),
                                      len, want_masks.data(), want_coeffs.data());

    std::vector<double> want_negated = rhs_coeffs;
    const std::uint64_t bit = std::uint64_t{1} << bit_dist(rng);
    kernels::scalar_ops().negate_where_bit(bit, rhs_masks.data(), want_negated.data(), len);

    for (kernels::Backend backend : backends) {
      if (backend == kernels::Backend::scalar) continue;
      const kernels::Ops* ops = kernels::ops_for(backend);
      ops->product_row(lhs_mask, lhs_coeff, rhs_masks.data(), rhs_coeffs.data(), len,
                       got_masks.data(), got_coeffs.data());
      std::vector<double> got_negated = rhs_coeffs;
      ops->negate_where_bit(bit, rhs_masks.data(), got_negated.data(), len);
      // Bit-exact: the SIMD lanes must reproduce the scalar kernels.
      if (got_masks != want_masks || got_coeffs != want_coeffs || got_negated != want_negated) {
        result.pass = false;
        result.detail = std::string("backend ") + std::string(kernels::backend_name(backend)) +
                        " diverges from scalar at trial " + std::to_string(t);
        return result;
      }
    }
  }
  result.detail = std::to_string(opt.trials) + " random rows, " +
                  std::to_string(backends.size() - 1) + " SIMD backend(s)";
  return result;
}

SuiteResult check_sandwich_gates(const Options& opt) {
  SuiteResult result{"sandwich-gate-equivalence", true, ""};
  const int max_n = std::min(opt.max_n, 5);
  std::uint64_t checked = 0;
  for (int n = 1; n <= max_n; ++n) {
    const AlgebraConfig cfg(n, /*complex_bit=*/true, /*aux_bit=*/true);
    // Every comb over the complex flag and the data bits; the auxiliary
    // position stays clear in states.
    const std::uint64_t size = std::uint64_t{1} << (n + 1);
    for (std::uint64_t bits = 0; bits < size; ++bits) {
      const CombMask mask = bits;  // positions 0..n
      const Multivector z = Multivector::comb(cfg, mask, 1.0);
      const oracle::DenseMultivector dense = oracle::densify(z);
      for (int k = 1; k <= n; ++k) {
        const Multivector want_neg = negate_bit(z, k);
        const Multivector want_sign = sign_bit(z, k);
        const Multivector got_neg =
            oracle::sparsify(oracle::sandwich_gate(dense, n, k, oracle::SandwichGate::neg), cfg);
        const Multivector got_sign =
            oracle::sparsify(oracle::sandwich_gate(dense, n, k, oracle::SandwichGate::sign), cfg);
        if (!(want_neg == got_neg) || !(want_sign == got_sign)) {
          result.pass = false;
          result.detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                          " mask=" + std::to_string(mask);
          return result;
        }
        ++checked;
      }
    }
  }
  result.detail = std::to_string(checked) + " comb/gate combinations";
  return result;
}

SuiteResult check_correspondence(const Options& opt) {
  SuiteResult result{"circuit-correspondence", true, ""};
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> width_dist(1, 4);
  std::uniform_int_distribution<int> depth_dist(0, 20);
  std::uniform_real_distribution<double> angle_dist(-3.2, 3.2);

  const int circuits = std::max(1, opt.trials / 5);
  for (int t = 0; t < circuits; ++t) {
    const int n = width_dist(rng);
    Circuit circuit;
    circuit.width = n;
    circuit.complex_bit = true;
    std::uniform_int_distribution<int> bit_dist(1, n);
    std::uniform_int_distribution<int> kind_dist(0, n >= 3 ? 8 : (n >= 2 ? 7 : 6));
    const int depth = depth_dist(rng);
    for (int d = 0; d < depth; ++d) {
      switch (kind_dist(rng)) {
        case 0: circuit.ops.push_back(GateOp::had(bit_dist(rng))); break;
        case 1: circuit.ops.push_back(GateOp::neg(bit_dist(rng))); break;
        case 2: circuit.ops.push_back(GateOp::pauli_y(bit_dist(rng))); break;
        case 3: circuit.ops.push_back(GateOp::pauli_z(bit_dist(rng))); break;
        case 4: circuit.ops.push_back(GateOp::phase(bit_dist(rng), angle_dist(rng))); break;
        case 5: circuit.ops.push_back(GateOp::t(bit_dist(rng))); break;
        case 6: circuit.ops.push_back(GateOp::global_phase(angle_dist(rng))); break;
        case 7: {
          int c = bit_dist(rng), target = bit_dist(rng);
          while (target == c) target = bit_dist(rng);
          circuit.ops.push_back(GateOp::cnot(c, target));
          break;
        }
        default: {
          int c1 = bit_dist(rng), c2 = bit_dist(rng), target = bit_dist(rng);
          while (c2 == c1) c2 = bit_dist(rng);
          while (target == c1 || target == c2) target = bit_dist(rng);
          circuit.ops.push_back(GateOp::toffoli(c1, c2, target));
          break;
        }
      }
    }

    std::uniform_int_distribution<std::uint64_t> index_dist(0, (std::uint64_t{1} << n) - 1);
    const std::uint64_t start = index_dist(rng);
    const Multivector state = oracle::correspondence_inverse(oracle::StateVector::basis(n, start));

    const auto [ga_result, counter] = apply_circuit(state, circuit);
    const oracle::StateVector sv_result =
        oracle::sv_apply_circuit(oracle::StateVector::basis(n, start), circuit);
    const double diff = oracle::sv_max_diff(oracle::correspondence(ga_result), sv_result);
    if (diff > 1e-10) {
      result.pass = false;
      result.detail = "circuit " + std::to_string(t) + " diverges by " + std::to_string(diff) +
                      ":\n" + print_circuit(circuit);
      return result;
    }
  }
  result.detail = std::to_string(circuits) + " random circuits within 1e-10";
  return result;
}

SuiteResult check_associativity(const Options& opt) {
  SuiteResult result{"product-associativity", true, ""};
  std::mt19937_64 rng(opt.seed);
  const int trials = std::max(1, opt.trials / 5);
  for (int t = 0; t < trials; ++t) {
    const AlgebraConfig cfg(6);
    const Multivector a = random_multivector(rng, cfg, 6);
    const Multivector b = random_multivector(rng, cfg, 6);
    const Multivector c = random_multivector(rng, cfg, 6);
    const Multivector left = geometric_product(geometric_product(a, b), c);
    const Multivector right = geometric_product(a, geometric_product(b, c));
    if (!(left == right)) {
      result.pass = false;
      result.detail = "trial " + std::to_string(t);
      return result;
    }
  }
  result.detail = std::to_string(trials) + " random triples, exact";
  return result;
}

std::vector<SuiteResult> run_all(const Options& opt) {
  return {check_product_signs(opt), check_kernel_backends(opt), check_sandwich_gates(opt),
          check_correspondence(opt), check_associativity(opt)};
}

}  // namespace gacomb::verify
