#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "config.hpp"

namespace secretary::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Record written next to every command's outputs. Passing the file back
/// through --config reruns a sweep with the same configuration.
struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  Json config = Json::object();
  std::uint64_t master_seed = 0;
  std::vector<std::string> artifacts;
  double wall_clock_seconds = 0.0;
  std::string started_at;  // UTC, ISO 8601
};

Json manifest_to_json(const RunManifest& manifest);
std::string utc_timestamp(std::chrono::system_clock::time_point when);
void write_manifest(const RunManifest& manifest, const std::filesystem::path& path);

}  // namespace secretary::cli
