#include "mbk/render.hpp"

#include <algorithm>
#include <stdexcept>

#include "mbk/parallel.hpp"

namespace mbk::render {

PlaneSet parse_plane_set(std::string_view text) {
  if (text == "multibrot") return PlaneSet::multibrot;
  if (text == "hyperbrot") return PlaneSet::hyperbrot;
  throw std::invalid_argument("unknown set '" + std::string(text) + "' (multibrot|hyperbrot)");
}

std::string_view to_string(PlaneSet s) {
  return s == PlaneSet::multibrot ? "multibrot" : "hyperbrot";
}

void Window2::validate() const {
  if (!(x_hi > x_lo) || !(y_hi > y_lo))
    throw std::invalid_argument("window must satisfy lo < hi on both axes");
}

std::vector<double> pixel_centers(double lo, double hi, int n) {
  const double center = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[std::size_t(i)] = center + half * (double(2 * i + 1 - n) / n);
  return out;
}

Raster render2d(PlaneSet set, const Window2& window, int width, int height,
                const dynamics::IterationParams& params, unsigned workers) {
  window.validate();
  if (width < 1 || height < 1) throw std::invalid_argument("resolution must be at least 1x1");
  params.validate_for_membership();

  const std::vector<double> xs = pixel_centers(window.x_lo, window.x_hi, width);
  std::vector<double> ys = pixel_centers(window.y_lo, window.y_hi, height);
  std::reverse(ys.begin(), ys.end());

  Raster r{width, height, params.max_iter, std::vector<std::uint32_t>(std::size_t(width) * height)};
  const std::uint32_t cap = params.max_iter > 1 ? std::uint32_t(params.max_iter - 1) : 0;
  parallel_for(std::size_t(height), workers ? workers : worker_count(),
               [&](std::size_t begin, std::size_t end) {
                 for (std::size_t y = begin; y < end; ++y)
                   for (int x = 0; x < width; ++x) {
                     const dynamics::EscapeResult e =
                         set == PlaneSet::multibrot
                             ? dynamics::iterate_complex({xs[std::size_t(x)], ys[y]}, params)
                             : dynamics::iterate_hyperbolic({xs[std::size_t(x)], ys[y]}, params);
                     r.counts[y * std::size_t(width) + std::size_t(x)] =
                         e.escaped ? std::min(std::uint32_t(e.iterations), cap)
                                   : std::uint32_t(params.max_iter);
                   }
               },
               1);
  return r;
}

std::uint8_t gray_level(std::uint32_t count, int max_iter) {
  if (count >= std::uint32_t(max_iter)) return 0;
  if (max_iter <= 1) return 255;
  const std::uint64_t m = std::max<std::uint32_t>(count, 1);
  return std::uint8_t(255 - (254 * (m - 1)) / std::uint64_t(max_iter - 1));
}

std::string encode_pgm(const Raster& r) {
  std::string out = "P5\n" + std::to_string(r.width) + " " + std::to_string(r.height) + "\n255\n";
  out.reserve(out.size() + r.counts.size());
  for (std::uint32_t c : r.counts) out.push_back(char(gray_level(c, r.max_iter)));
  return out;
}

}  // namespace mbk::render
