// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "gacomb/multivector.hpp"

namespace gacomb {

/// MVTX v1 text format. First line:
///   mv n=<dim> complex=<0|1> aux=<0|1>
/// then one term per non-empty line:
///   <coefficient> <bitstring>
/// where the bitstring has one character per reserved position, leftmost
/// being position 0 when complex=1 and position 1 otherwise. Duplicate
/// bitstrings and wrong-length lines are rejected with their line number.
Multivector read_mvtx(std::istream& in);
void write_mvtx(std::ostream& out, const Multivector& m);

Multivector read_mvtx_file(const std::string& path);
void write_mvtx_file(const std::string& path, const Multivector& m);

std::string to_mvtx(const Multivector& m);

}  // namespace gacomb
