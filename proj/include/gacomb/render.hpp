// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "gacomb/multivector.hpp"

namespace gacomb {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// One oriented colored polyline per non-scalar blade: one segment per set
/// mask position in ascending order, popcount(mask) + 1 points in total.
/// Segments carry their own palette slot so dimension pairs stay
/// distinguishable inside a single shape.
struct Polyline {
  std::vector<Vec2> points;
  std::vector<int> colors;       // per-segment palette index
  std::vector<bool> forward;     // per-segment arrowhead orientation
  std::string label;             // coefficient text, empty for +/-1
};

struct Scene {
  std::vector<Polyline> polylines;
  std::string scalar_label;  // the mask-0 coefficient, "0" when absent
  double width = 0.0;
  double height = 0.0;
};

inline constexpr int kRenderDimCap = 16;
inline constexpr int kPaletteSize = 8;

/// Hex color of a palette slot.
std::string_view palette_color(int index);

/// Bag-of-shapes layout. Position p points along the unit vector at angle
/// 90 degrees * (p - 1) / n from horizontal and takes the color pair
/// (p - 1) / 2; |coefficient| scales the first segment only and a negative
/// coefficient reverses every arrowhead. Polylines are placed on a grid so
/// they never overlap. Throws for dim > 16.
Scene layout(const Multivector& m);

/// Deterministic SVG 1.1: fixed element order, coordinates to three
/// decimals. Identical scenes produce byte-identical documents.
std::string emit_svg(const Scene& s);

}  // namespace gacomb
