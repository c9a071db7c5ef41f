#include "mbk/estimate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mbk/dynamics.hpp"
#include "mbk/parallel.hpp"
#include "mbk/render.hpp"
#include "mbk/slices.hpp"

namespace mbk::estimate {

namespace dyn = mbk::dynamics;

namespace {

double rel_error(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Half-width of a centered window holding the set, from the measured extent.
double half_width(const dyn::RealExtent& e) {
  return std::max(0.5, 1.1 * std::max(std::abs(e.lo_outer), std::abs(e.hi_outer)));
}

std::string formula_status(int p) {
  return dyn::real_extent_is_theorem(p) ? "theorem" : "conjecture";
}

}  // namespace

Kind parse_kind(std::string_view text) {
  if (text == "real-extent") return Kind::real_extent;
  if (text == "hyperbric-area") return Kind::hyperbric_area;
  if (text == "perplexbric-volume") return Kind::perplexbric_volume;
  throw std::invalid_argument("unknown estimate kind '" + std::string(text) +
                              "' (real-extent|hyperbric-area|perplexbric-volume)");
}

std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::real_extent: return "real-extent";
    case Kind::hyperbric_area: return "hyperbric-area";
    case Kind::perplexbric_volume: return "perplexbric-volume";
  }
  return "?";
}

double default_precision(Kind k) {
  switch (k) {
    case Kind::real_extent: return 1e-4;
    case Kind::hyperbric_area: return 5e-4;
    case Kind::perplexbric_volume: return 1.0 / 128.0;
  }
  return 1e-4;
}

nlohmann::ordered_json run(Kind kind, int p, std::optional<double> precision, unsigned workers) {
  const double h = precision.value_or(default_precision(kind));
  if (!(h > 0.0)) throw std::invalid_argument("precision must be positive");
  const auto boundary = dyn::IterationParams::for_degree(p, dyn::kBoundaryMaxIter);
  const dyn::Interval cf = dyn::closed_form_real_extent(p);
  const dyn::RealExtent extent =
      dyn::real_axis_extent(p, boundary, kind == Kind::real_extent ? h : std::min(h, 1e-4));

  nlohmann::ordered_json j;
  j["kind"] = to_string(kind);
  j["p"] = p;
  j["precision"] = h;

  if (kind == Kind::real_extent) {
    j["max_iter"] = boundary.max_iter;
    j["lo"] = extent.lo();
    j["hi"] = extent.hi();
    j["formula_lo"] = cf.lo;
    j["formula_hi"] = cf.hi;
    const double err = std::max(std::abs(extent.lo() - cf.lo), std::abs(extent.hi() - cf.hi));
    j["abs_error"] = err;
    j["rel_error_lo"] = rel_error(extent.lo(), cf.lo);
    j["rel_error_hi"] = rel_error(extent.hi(), cf.hi);
    if (dyn::real_extent_is_theorem(p))
      j["status"] = err <= 1e-3 ? "theorem reproduced" : "theorem not reproduced";
    else
      j["status"] = err <= 1e-3 ? "conjecture consistent" : "conjecture inconsistent";
    return j;
  }

  const double half = half_width(extent);
  const int n = std::max(1, int(std::ceil(2.0 * half / h - 1e-9)));
  j["window"] = {-half, half};
  j["cells_per_axis"] = n;

  if (kind == Kind::hyperbric_area) {
    // Both real orbits of a - b and a + b stay in the real extent: a square
    // of diagonal (hi - lo), area (hi - lo)^2 / 2.
    j["max_iter"] = boundary.max_iter;
    const std::vector<double> xs = render::pixel_centers(-half, half, n);
    std::atomic<std::size_t> members{0};
    parallel_for(std::size_t(n), workers ? workers : worker_count(), [&](std::size_t b, std::size_t e) {
      std::size_t local = 0;
      for (std::size_t i = b; i < e; ++i)
        for (int k = 0; k < n; ++k) local += dyn::member_hyperbrot({xs[i], xs[std::size_t(k)]}, boundary);
      members += local;
    });
    const double cell = (2.0 * half / n) * (2.0 * half / n);
    const double area = double(members) * cell;
    const double formula = (cf.hi - cf.lo) * (cf.hi - cf.lo) / 2.0;
    j["member_cells"] = std::size_t(members);
    j["area"] = area;
    j["formula"] = formula;
    j["rel_error"] = rel_error(area, formula);
    j["formula_status"] = formula_status(p);
    return j;
  }

  const auto params = dyn::IterationParams::for_degree(p, dyn::kDefaultMaxIter);
  j["max_iter"] = params.max_iter;
  slices::SampleOptions opts;
  opts.workers = workers;
  const auto grid = slices::sample_slice(SliceSpec(Unit::one, Unit::j1, Unit::j2),
                                         {{-half, -half, -half}, {half, half, half}}, {n, n, n},
                                         params, opts);
  j["member_cells"] = grid.member_count();
  j["volume"] = grid.member_volume();
  if (p % 2 == 1) {
    // Symmetric extent [-r, r]: the l1 ball |c1| + |c4| + |c6| <= r.
    const double r = cf.hi;
    const double formula = 4.0 / 3.0 * r * r * r;
    j["formula"] = formula;
    j["rel_error"] = rel_error(grid.member_volume(), formula);
    j["formula_status"] = p == 3 ? "theorem" : "conjecture";
  } else {
    j["formula"] = nullptr;
    j["formula_status"] = "none (asymmetric real extent)";
  }
  return j;
}

}  // namespace mbk::estimate
