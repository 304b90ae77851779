#include "secretary/instance_json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace secretary {

using ordered_json = nlohmann::ordered_json;

std::string instance_to_json(const Instance& instance) {
  ordered_json doc;
  doc["values"] = std::vector<double>(instance.actual_values().begin(),
                                      instance.actual_values().end());
  doc["predictions"] = std::vector<double>(instance.predicted_values().begin(),
                                           instance.predicted_values().end());
  doc["k"] = instance.capacity();
  return doc.dump();
}

Instance instance_from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
    return Instance(doc.at("values").get<std::vector<double>>(),
                    doc.at("predictions").get<std::vector<double>>(),
                    doc.at("k").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed instance JSON: ") + e.what());
  }
}

void write_instance(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << instance_to_json(instance) << '\n';
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return instance_from_json(buffer.str());
}

}  // namespace secretary
