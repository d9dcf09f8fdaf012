// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "gacomb/comb.hpp"

#include <doctest.h>

using namespace gacomb;

TEST_CASE("config validates width and reserved positions") {
  CHECK_THROWS_AS(AlgebraConfig(0), ConfigError);
  CHECK_THROWS_AS(AlgebraConfig(61, true, true), ConfigError);
  CHECK_NOTHROW(AlgebraConfig(60, true, true));

  AlgebraConfig cfg(3, true, true);
  CHECK(cfg.total_dims() == 5);
  CHECK(cfg.allowed_mask() == 0b11111);
  CHECK(cfg.aux_position() == 4);

  AlgebraConfig plain(3);
  CHECK(plain.total_dims() == 3);
  CHECK(plain.allowed_mask() == 0b1110);
  CHECK(plain.lowest_position() == 1);
}

TEST_CASE("mask formatting starts at the lowest reserved position") {
  AlgebraConfig with_complex(2, true);
  CHECK(format_mask(with_complex, 0b101) == "101");
  CHECK(parse_mask(with_complex, "101") == 0b101);

  AlgebraConfig plain(5);
  CHECK(format_mask(plain, (1 << 1) | (1 << 4) | (1 << 5)) == "10011");
  CHECK(parse_mask(plain, "10011") == ((1 << 1) | (1 << 4) | (1 << 5)));

  CHECK_THROWS_AS(parse_mask(plain, "1001"), FormatError);
  CHECK_THROWS_AS(parse_mask(plain, "10012"), FormatError);
}

TEST_CASE("coefficient formatting") {
  CHECK(format_coeff(5.0) == "5");
  CHECK(format_coeff(-1.0) == "-1");
  CHECK(format_coeff(0.0) == "0");
  CHECK(format_coeff(1.5) == "1.5");
  CHECK(format_coeff(0.70710678118654752440) == "0.7071067811865476");
}
