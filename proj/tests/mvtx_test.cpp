// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "gacomb/mvtx.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

#include "test_util.hpp"

using namespace gacomb;
using gacomb::testing::random_mv;

namespace {

Multivector parse(const std::string& text) {
  std::istringstream in(text);
  return read_mvtx(in);
}

}  // namespace

TEST_CASE("read a simple state") {
  const Multivector m = parse("mv n=3 complex=0 aux=0\n1 000\n-0.5 111\n");
  CHECK(m.dim() == 3);
  CHECK(m.term_count() == 2);
  CHECK(m.coeff(0) == 1.0);
  CHECK(m.coeff(0b1110) == -0.5);
}

TEST_CASE("complex flag owns the leftmost column") {
  const Multivector m = parse("mv n=2 complex=1 aux=0\n2 101\n");
  CHECK(m.coeff(0b101) == 2.0);
}

TEST_CASE("write/read round trip") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const AlgebraConfig cfg(1 + static_cast<int>(rng() % 10), rng() & 1, rng() & 1);
    const Multivector m = random_mv(rng, cfg, 12, /*integer_coeffs=*/false);
    CHECK(parse(to_mvtx(m)) == m);
  }
}

TEST_CASE("rejects malformed input with line numbers") {
  SUBCASE("missing header") {
    CHECK_THROWS_WITH_AS(parse("1 000\n"), doctest::Contains("line 1"), FormatError);
  }
  SUBCASE("wrong-length bitstring") {
    CHECK_THROWS_WITH_AS(parse("mv n=3 complex=0 aux=0\n1 000\n1 0011\n"),
                         doctest::Contains("line 3"), FormatError);
  }
  SUBCASE("duplicate bitstring") {
    CHECK_THROWS_WITH_AS(parse("mv n=2 complex=0 aux=0\n1 01\n2 01\n"),
                         doctest::Contains("line 3"), FormatError);
  }
  SUBCASE("bad coefficient") {
    CHECK_THROWS_WITH_AS(parse("mv n=2 complex=0 aux=0\nx 01\n"), doctest::Contains("line 2"),
                         FormatError);
  }
  SUBCASE("bad bitstring characters") {
    CHECK_THROWS_AS(parse("mv n=2 complex=0 aux=0\n1 02\n"), FormatError);
  }
}

TEST_CASE("zero coefficients are dropped on read") {
  const Multivector m = parse("mv n=2 complex=0 aux=0\n0 01\n1 10\n");
  CHECK(m.term_count() == 1);
}
