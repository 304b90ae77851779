#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "secretary/core.hpp"

namespace secretary {

/// {"values": [...], "predictions": [...], "k": int} with fields in that
/// order. Doubles are written with round-trip precision.
std::string instance_to_json(const Instance& instance);
Instance instance_from_json(std::string_view text);

void write_instance(const Instance& instance, const std::filesystem::path& path);
Instance read_instance(const std::filesystem::path& path);

}  // namespace secretary
