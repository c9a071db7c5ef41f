#pragma once

// Run manifests: enough to rerun a command and check that it reproduces the
// same output bytes.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace mbk::manifest {

inline constexpr std::string_view kToolVersion = "1.0.0";

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

struct Output {
  std::string role;  // image, voxels, points, report, stdout
  std::string path;  // empty for stdout
  std::string sha256;
};

struct RunManifest {
  std::string command;
  nlohmann::ordered_json parameters;
  std::uint64_t seed = 0;
  std::string version{kToolVersion};
  double wall_time_s = 0.0;
  std::vector<Output> outputs;

  nlohmann::ordered_json to_json() const;
  static RunManifest from_json(const nlohmann::ordered_json& j);
};

}  // namespace mbk::manifest
