#pragma once

// The `mbk` subcommands as library functions. Each takes its fully resolved
// parameters as JSON (the same object recorded in the run manifest), so a
// manifest can be replayed without going back through argument parsing.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "mbk/hypercomplex.hpp"
#include "mbk/manifest.hpp"

namespace mbk::cli {

struct Outcome {
  int exit_code = 0;
  std::string text;  // what the command prints on stdout
  std::vector<manifest::Output> outputs;
};

// Missing keys are filled with defaults; unknown keys are rejected.
nlohmann::ordered_json normalize(const std::string& command, nlohmann::ordered_json params);

Outcome render2d(const nlohmann::ordered_json& params);
Outcome render3d(const nlohmann::ordered_json& params);
Outcome verify(const nlohmann::ordered_json& params, const UnitTable& table = kUnitTable);
Outcome estimate(const nlohmann::ordered_json& params);

// Dispatches by name after normalize().
Outcome run(const std::string& command, const nlohmann::ordered_json& params);

// Timed run() with the manifest describing it.
struct Recorded {
  Outcome outcome;
  manifest::RunManifest manifest;
};
Recorded run_recorded(const std::string& command, const nlohmann::ordered_json& params);

// Reruns the manifest's command with outputs redirected to `scratch` and
// compares digests role by role. Exit code 0 iff every digest matches.
Outcome replay(const manifest::RunManifest& m, const std::filesystem::path& scratch);

}  // namespace mbk::cli
