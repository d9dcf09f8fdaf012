// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "gacomb/gates.hpp"

namespace gacomb {

/// Points at the first offending character; line and column are 1-based.
struct ParseError {
  int line = 1;
  int column = 1;
  std::string message;
  std::string token;
};

/// Line-oriented circuit grammar:
///   circuit n=<int> [complex]
///   h <k> | x <k> | z <k> | y <k> | phase <k> <angle> | t <k>
///   cnot <c> <t> | toffoli <c1> <c2> <t> | reset <k> | select <k>
///   i | gphase <angle>
/// '#' starts a comment; blank lines are ignored. Angles are decimal floats
/// or the literals pi, pi/2, pi/4. Indices are validated against the header.
std::variant<Circuit, ParseError> parse_circuit(std::string_view text);

/// Canonical lowercase rendering; parse(print(c)) is structurally equal to c.
/// Angles use 17 significant digits so the round trip is bit-exact.
std::string print_circuit(const Circuit& c);

/// Formats a ParseError as "line:column: message".
std::string to_string(const ParseError& e);

}  // namespace gacomb
