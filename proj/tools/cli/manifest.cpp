#include "manifest.hpp"

#include <ctime>
#include <fstream>
#include <stdexcept>

namespace secretary::cli {

Json manifest_to_json(const RunManifest& manifest) {
  Json doc;
  doc["tool"] = "secretary";
  doc["version"] = kToolVersion;
  doc["command"] = manifest.command;
  doc["arguments"] = manifest.arguments;
  doc["master_seed"] = manifest.master_seed;
  doc["config"] = manifest.config;
  doc["artifacts"] = manifest.artifacts;
  doc["started_at"] = manifest.started_at;
  doc["wall_clock_seconds"] = manifest.wall_clock_seconds;
  return doc;
}

std::string utc_timestamp(std::chrono::system_clock::time_point when) {
  const std::time_t t = std::chrono::system_clock::to_time_t(when);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << manifest_to_json(manifest).dump(2) << '\n';
}

}  // namespace secretary::cli
