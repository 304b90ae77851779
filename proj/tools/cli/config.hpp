#pragma once

#include <filesystem>

#include "json.hpp"
#include "secretary/simulate.hpp"

namespace secretary::cli {

using Json = nlohmann::ordered_json;

Json algorithm_to_json(const AlgorithmSpec& spec);
/// {"name": "learned-dynkin", "tau": 0.313, "theta": 0.646, "rule": "global"};
/// prophet-threshold also takes "theta_relative".
AlgorithmSpec algorithm_from_json(const Json& doc);

Json config_to_json(const ExperimentConfig& config);
/// Accepts a config document or a run manifest (reads its "config" member).
/// Missing fields keep their default values. Throws std::invalid_argument.
ExperimentConfig config_from_json(const Json& doc);
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace secretary::cli
