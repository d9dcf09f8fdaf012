// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "gacomb/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

#include "gacomb/verify.hpp"
#include "test_util.hpp"

using namespace gacomb;
using namespace gacomb::oracle;
using gacomb::testing::bits;
using gacomb::testing::data_bits;
using gacomb::testing::random_mv;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

TEST_CASE("dense product reproduces the worked 5-bit example") {
  const int dim = 7;
  const auto a = DenseMultivector::blade(dim, data_bits("10011"));
  const auto b = DenseMultivector::blade(dim, data_bits("01011"));
  const auto p = dense_product(a, b);
  for (std::uint64_t mask = 0; mask < p.coeffs.size(); ++mask) {
    CHECK(p[mask] == (mask == data_bits("11000") ? -1.0 : 0.0));
  }
}

TEST_CASE("blade squares carry the reordering sign, reverse-squares are one") {
  // A grade-g blade squares to (-1)^(g(g-1)/2); it is the *reverse* square
  // c* c that always gives +1.
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const auto blade = DenseMultivector::blade(6, mask);
    const int g = std::popcount(mask);
    const double sign = ((g * (g - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
    CHECK(dense_product(blade, blade)[0] == sign);
    CHECK(dense_product(dense_reverse(blade), blade)[0] == 1.0);
  }
}

TEST_CASE("dense product agrees with the sparse engine on random pairs") {
  std::mt19937_64 rng(3);
  const AlgebraConfig cfg(8);
  std::uniform_int_distribution<std::uint64_t> dist(0, cfg.allowed_mask());
  for (int t = 0; t < 1000; ++t) {
    const CombMask a = dist(rng) & cfg.allowed_mask();
    const CombMask b = dist(rng) & cfg.allowed_mask();
    const Multivector sparse =
        geometric_product(Multivector::comb(cfg, a), Multivector::comb(cfg, b));
    const auto dense = dense_product(DenseMultivector::blade(10, a), DenseMultivector::blade(10, b));
    REQUIRE(sparse.term_count() == 1);
    CHECK(dense[sparse.mask_at(0)] == sparse.coeff_at(0));
  }
}

TEST_CASE("dense product is associative on random multivectors") {
  std::mt19937_64 rng(5);
  const AlgebraConfig cfg(4);
  for (int t = 0; t < 20; ++t) {
    const auto a = densify(random_mv(rng, cfg, 4));
    const auto b = densify(random_mv(rng, cfg, 4));
    const auto c = densify(random_mv(rng, cfg, 4));
    const auto left = dense_product(dense_product(a, b), c);
    const auto right = dense_product(a, dense_product(b, c));
    CHECK(left.coeffs == right.coeffs);
  }
}

TEST_CASE("sandwich gates equal the bit-level maps (n <= 5, complex flag included)") {
  const verify::SuiteResult result = verify::check_sandwich_gates({5, 0, 0});
  INFO(result.detail);
  CHECK(result.pass);
}

TEST_CASE("sandwich negation twice is the identity") {
  const AlgebraConfig cfg(3, true, true);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    Multivector z = random_mv(rng, AlgebraConfig(3, true, false), 4);
    z = z.with_config(cfg);
    const auto dense = densify(z);
    for (int k = 1; k <= 3; ++k) {
      const auto twice = sandwich_gate(sandwich_gate(dense, 3, k, SandwichGate::neg), 3, k,
                                       SandwichGate::neg);
      CHECK(twice.coeffs == dense.coeffs);
    }
  }
}

TEST_CASE("correspondence pairs real and imaginary coefficients") {
  const AlgebraConfig cfg(2, /*complex_bit=*/true);
  const double phi = 1.1;
  // (1/sqrt 2)(c_010 + cos phi c_001 + sin phi c_101) <-> (|10> + e^{i phi}|01>)/sqrt 2
  const Multivector state = Multivector::from_terms(
      cfg, {{bits({1}), kInvSqrt2},
            {bits({2}), kInvSqrt2 * std::cos(phi)},
            {bits({0, 2}), kInvSqrt2 * std::sin(phi)}});
  const StateVector sv = correspondence(state);
  CHECK(sv.amps[0b10] == std::complex<double>(kInvSqrt2, 0.0));
  CHECK(sv.amps[0b01] ==
        std::complex<double>(kInvSqrt2 * std::cos(phi), kInvSqrt2 * std::sin(phi)));
  CHECK(sv.amps[0b00] == std::complex<double>(0.0, 0.0));
  CHECK(sv.amps[0b11] == std::complex<double>(0.0, 0.0));
}

TEST_CASE("vacuum corresponds to |0...0>") {
  const AlgebraConfig cfg(3, true);
  const StateVector sv = correspondence(Multivector::vacuum(cfg));
  CHECK(sv.amps[0] == std::complex<double>(1.0, 0.0));
}

TEST_CASE("correspondence round-trips and is i-linear") {
  std::mt19937_64 rng(11);
  const AlgebraConfig cfg(3, /*complex_bit=*/true);
  for (int t = 0; t < 40; ++t) {
    const Multivector z = random_mv(rng, cfg, 8, false);
    CHECK(correspondence_inverse(correspondence(z)) == z);
    const StateVector lhs = correspondence(complex_i(z));
    StateVector rhs = correspondence(z);
    for (auto& amp : rhs.amps) amp *= std::complex<double>(0.0, 1.0);
    CHECK(sv_max_diff(lhs, rhs) == 0.0);
  }
}

TEST_CASE("state-vector gate basics") {
  // H|0> = (|0> + |1>)/sqrt 2
  const StateVector h0 = sv_apply(StateVector::basis(1, 0), GateOp::had(1));
  CHECK(std::abs(h0.amps[0] - std::complex<double>(kInvSqrt2, 0)) < 1e-15);
  CHECK(std::abs(h0.amps[1] - std::complex<double>(kInvSqrt2, 0)) < 1e-15);

  // CNOT|11> = |10>
  const StateVector c11 = sv_apply(StateVector::basis(2, 0b11), GateOp::cnot(1, 2));
  CHECK(c11.amps[0b10] == std::complex<double>(1.0, 0.0));

  CHECK_THROWS(sv_apply(StateVector::basis(1, 0), GateOp::reset(1)));
}

TEST_CASE("random circuits commute with the correspondence map") {
  const verify::SuiteResult result = verify::check_correspondence({4, 1000, 12345});
  INFO(result.detail);
  CHECK(result.pass);
}

TEST_CASE("product signs match the dense oracle") {
  const verify::SuiteResult result = verify::check_product_signs({6, 2000, 99});
  INFO(result.detail);
  CHECK(result.pass);
}
