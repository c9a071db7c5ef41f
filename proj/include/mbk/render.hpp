#pragma once

// 2D escape-time rasters and their grayscale netpbm encoding.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mbk/dynamics.hpp"

namespace mbk::render {

enum class PlaneSet { multibrot, hyperbrot };

PlaneSet parse_plane_set(std::string_view text);
std::string_view to_string(PlaneSet s);

// x spans [x_lo, x_hi] left to right, y spans [y_lo, y_hi] bottom to top.
struct Window2 {
  double x_lo = -1.5, x_hi = 1.5;
  double y_lo = -1.5, y_hi = 1.5;

  void validate() const;
};

// Iteration counts per pixel, row 0 at the top. Members hold max_iter and
// escaped pixels their escape iteration, capped at max_iter - 1.
struct Raster {
  int width = 0;
  int height = 0;
  int max_iter = 0;
  std::vector<std::uint32_t> counts;

  bool is_member(int x, int y) const { return counts[std::size_t(y) * width + x] == std::uint32_t(max_iter); }
};

// Pixel centers along an axis of n pixels. Mirrored indices of a window
// centered on 0 get exactly negated coordinates.
std::vector<double> pixel_centers(double lo, double hi, int n);

// Multibrot: c = x + y i1. Hyperbrot: c = x + y j.
Raster render2d(PlaneSet set, const Window2& window, int width, int height,
                const dynamics::IterationParams& params, unsigned workers = 0);

// Members 0; an escape at iteration m maps to 255 - floor(254 (m-1)/(M-1)).
std::uint8_t gray_level(std::uint32_t count, int max_iter);

std::string encode_pgm(const Raster& r);

}  // namespace mbk::render
