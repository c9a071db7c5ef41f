#pragma once

// Numeric estimates of the closed-form quantities, each printed next to its
// formula value and relative error.

#include <optional>
#include <string_view>

#include <json.hpp>

namespace mbk::estimate {

enum class Kind { real_extent, hyperbric_area, perplexbric_volume };

Kind parse_kind(std::string_view text);
std::string_view to_string(Kind k);

// Bisection tolerance for real-extent, cell edge for the area and volume.
double default_precision(Kind k);

// Throws std::invalid_argument unless precision > 0.
nlohmann::ordered_json run(Kind kind, int p, std::optional<double> precision, unsigned workers = 0);

}  // namespace mbk::estimate
