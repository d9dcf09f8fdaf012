// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "gacomb/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace gacomb {

namespace {

constexpr double kUnit = 40.0;       // length of a unit segment
constexpr double kCellPad = 22.0;    // padding around each polyline cell
constexpr double kLabelStrip = 34.0; // room for the scalar label
constexpr double kArrowLen = 9.0;
constexpr double kArrowHalf = 3.5;

constexpr std::string_view kPalette[kPaletteSize] = {
    "#d62728", "#1f77b4", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
};

int color_for_position(int position) {
  // Positions pair up: (1,2) share a palette slot, (3,4) the next, and so
  // on. The complex flag at position 0 wraps to the last slot.
  if (position < 1) return kPaletteSize - 1;
  return ((position - 1) / 2) % kPaletteSize;
}

std::string fmt3(double v) {
  if (std::abs(v) < 0.0005) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string_view palette_color(int index) {
  return kPalette[((index % kPaletteSize) + kPaletteSize) % kPaletteSize];
}

Scene layout(const Multivector& m) {
  if (m.dim() > kRenderDimCap) {
    throw ConfigError("layout: width " + std::to_string(m.dim()) + " exceeds the render cap of " +
                      std::to_string(kRenderDimCap));
  }

  Scene scene;
  scene.scalar_label = format_coeff(scalar_part(m));

  const int n = m.dim();
  struct Box {
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  };
  std::vector<Box> boxes;

  for (std::size_t t = 0; t < m.term_count(); ++t) {
    const CombMask mask = m.mask_at(t);
    if (mask == 0) continue;
    const double coeff = m.coeff_at(t);

    Polyline line;
    line.points.push_back({0.0, 0.0});
    bool first = true;
    for (int p = 0; p < 64; ++p) {
      if (!((mask >> p) & 1)) continue;
      const double theta = std::numbers::pi / 2 * (p - 1) / n;
      const double len = first ? kUnit * std::abs(coeff) : kUnit;
      first = false;
      const Vec2 prev = line.points.back();
      line.points.push_back({prev.x + len * std::cos(theta), prev.y - len * std::sin(theta)});
      line.colors.push_back(color_for_position(p));
    }
    line.forward.assign(line.points.size() - 1, coeff >= 0.0);
    if (coeff != 1.0 && coeff != -1.0) line.label = format_coeff(coeff);

    Box box;
    for (const Vec2& pt : line.points) {
      box.min_x = std::min(box.min_x, pt.x);
      box.min_y = std::min(box.min_y, pt.y);
      box.max_x = std::max(box.max_x, pt.x);
      box.max_y = std::max(box.max_y, pt.y);
    }
    boxes.push_back(box);
    scene.polylines.push_back(std::move(line));
  }

  if (scene.polylines.empty()) {
    scene.width = 200.0;
    scene.height = kLabelStrip + 26.0;
    return scene;
  }

  double cell_w = 0.0, cell_h = 0.0;
  for (const Box& box : boxes) {
    cell_w = std::max(cell_w, box.max_x - box.min_x);
    cell_h = std::max(cell_h, box.max_y - box.min_y);
  }
  cell_w += 2 * kCellPad;
  cell_h += 2 * kCellPad;

  const int count = static_cast<int>(scene.polylines.size());
  const int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(count))));
  const int rows = (count + cols - 1) / cols;

  for (int idx = 0; idx < count; ++idx) {
    const int col = idx % cols;
    const int row = idx / cols;
    const double dx = col * cell_w + kCellPad - boxes[idx].min_x;
    const double dy = kLabelStrip + row * cell_h + kCellPad - boxes[idx].min_y;
    for (Vec2& pt : scene.polylines[idx].points) {
      pt.x += dx;
      pt.y += dy;
    }
  }

  scene.width = cols * cell_w;
  scene.height = kLabelStrip + rows * cell_h;
  return scene;
}

std::string emit_svg(const Scene& s) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt3(s.width) +
         "\" height=\"" + fmt3(s.height) + "\" viewBox=\"0 0 " + fmt3(s.width) + " " +
         fmt3(s.height) + "\">\n";
  out += "<text x=\"12.000\" y=\"24.000\" font-family=\"monospace\" font-size=\"18\">" +
         s.scalar_label + "</text>\n";

  for (const Polyline& line : s.polylines) {
    out += "<g stroke-width=\"2\">\n";
    for (std::size_t i = 0; i + 1 < line.points.size(); ++i) {
      const std::string_view color = palette_color(line.colors[i]);
      Vec2 from = line.points[i];
      Vec2 to = line.points[i + 1];
      out += "<line x1=\"" + fmt3(from.x) + "\" y1=\"" + fmt3(from.y) + "\" x2=\"" + fmt3(to.x) +
             "\" y2=\"" + fmt3(to.y) + "\" stroke=\"";
      out += color;
      out += "\"/>\n";

      // Arrowhead at the tip; a reversed flag points at the segment start.
      if (!line.forward[i]) std::swap(from, to);
      const double dx = to.x - from.x;
      const double dy = to.y - from.y;
      const double len = std::hypot(dx, dy);
      if (len == 0.0) continue;
      const double ux = dx / len, uy = dy / len;
      const double bx = to.x - kArrowLen * ux, by = to.y - kArrowLen * uy;
      out += "<polygon fill=\"";
      out += color;
      out += "\" points=\"" + fmt3(to.x) + "," + fmt3(to.y) + " " + fmt3(bx - kArrowHalf * uy) +
             "," + fmt3(by + kArrowHalf * ux) + " " + fmt3(bx + kArrowHalf * uy) + "," +
             fmt3(by - kArrowHalf * ux) + "\"/>\n";
    }
    if (!line.label.empty()) {
      out += "<text x=\"" + fmt3(line.points.front().x + 4.0) + "\" y=\"" +
             fmt3(line.points.front().y + 16.0) + "\" font-family=\"monospace\" font-size=\"13\">" +
             line.label + "</text>\n";
    }
    out += "</g>\n";
  }

  out += "</svg>\n";
  return out;
}

}  // namespace gacomb
