// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

// Regenerates the frozen SVG goldens. Run from anywhere:
//   golden_gen <output-dir>
// Inspect the output before committing; the render tests compare bytes.

#include <fstream>
#include <iostream>

#include "gacomb/algorithms.hpp"
#include "gacomb/render.hpp"

using namespace gacomb;

namespace {

Multivector fig4_multivector() {
  const AlgebraConfig cfg(6);
  return Multivector::from_terms(cfg, {{0, 5.0},
                                       {CombMask{1} << 1, 1.5},
                                       {CombMask{1} << 2, -1.0},
                                       {(CombMask{1} << 1) | (CombMask{1} << 4), 1.0},
                                       {(CombMask{1} << 5) | (CombMask{1} << 6), 3.0},
                                       {(CombMask{1} << 1) | (CombMask{1} << 4) |
                                            (CombMask{1} << 5),
                                        2.0}});
}

void emit(const std::string& dir, const std::string& name, const Multivector& m) {
  const std::string path = dir + "/" + name;
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    std::exit(1);
  }
  out << emit_svg(layout(m));
  std::cout << "wrote " << path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: golden_gen <output-dir>\n";
    return 1;
  }
  const std::string dir = argv[1];
  emit(dir, "bell_psi_plus.svg", bell(BellState::psi_plus));
  emit(dir, "ghz.svg", ghz());
  emit(dir, "fig4.svg", fig4_multivector());
  emit(dir, "hadamard3.svg", hadamard_state(3));
  return 0;
}
