#pragma once

// Line-oriented key=value reports with a JSON mirror.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace mbk::report {

struct Check {
  std::string name;
  bool passed = false;
  double max_residual = 0.0;
  std::size_t samples = 0;
  std::string witness;  // empty when passed
  std::string note;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
  std::size_t failures() const;
  void append(const Report& other);

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

// Shortest decimal that round-trips.
std::string format_double(double v);

// Quotes values containing spaces or quotes.
std::string kv(const std::string& key, const std::string& value);

}  // namespace mbk::report
