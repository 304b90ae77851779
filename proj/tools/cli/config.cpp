#include "config.hpp"

#include <fstream>
#include <stdexcept>

namespace secretary::cli {

Json algorithm_to_json(const AlgorithmSpec& spec) {
  Json doc;
  doc["name"] = spec.name();
  switch (spec.kind) {
    case AlgorithmKind::kDynkin:
      doc["tau"] = spec.tau;
      break;
    case AlgorithmKind::kLearnedDynkin:
      doc["tau"] = spec.tau;
      doc["theta"] = spec.theta;
      doc["rule"] = std::string(to_string(spec.switch_rule));
      break;
    case AlgorithmKind::kLearnedKleinberg:
      doc["theta"] = spec.theta;
      doc["rule"] = std::string(to_string(spec.switch_rule));
      break;
    case AlgorithmKind::kProphetThreshold:
      doc["theta"] = spec.theta;
      doc["theta_relative"] = spec.theta_relative;
      break;
    default:
      break;
  }
  return doc;
}

AlgorithmSpec algorithm_from_json(const Json& doc) {
  AlgorithmSpec spec;
  spec.kind = parse_algorithm_kind(doc.at("name").get<std::string>());
  if (spec.kind == AlgorithmKind::kLearnedDynkin) spec.tau = 0.313;
  spec.tau = doc.value("tau", spec.tau);
  spec.theta = doc.value("theta", spec.theta);
  spec.theta_relative = doc.value("theta_relative", false);
  if (doc.contains("rule")) spec.switch_rule = parse_error_rule(doc.at("rule").get<std::string>());
  validate(spec);
  return spec;
}

Json config_to_json(const ExperimentConfig& config) {
  Json doc;
  Json gens = Json::array();
  for (auto g : config.generators) gens.push_back(std::string(to_string(g)));
  doc["generators"] = gens;
  doc["epsilons"] = config.epsilons;
  doc["ks"] = config.ks;
  doc["n"] = config.n;
  doc["datasets"] = config.datasets;
  doc["trials"] = config.trials;
  doc["master_seed"] = config.master_seed;
  doc["jobs"] = config.jobs;
  Json algs = Json::array();
  for (const auto& a : config.algorithms) algs.push_back(algorithm_to_json(a));
  doc["algorithms"] = algs;
  return doc;
}

ExperimentConfig config_from_json(const Json& input) {
  const Json& doc = input.contains("config") ? input.at("config") : input;
  if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");
  ExperimentConfig config = default_config();
  try {
    if (doc.contains("generators")) {
      config.generators.clear();
      for (const auto& g : doc.at("generators")) {
        config.generators.push_back(parse_generator_kind(g.get<std::string>()));
      }
    }
    if (doc.contains("epsilons")) config.epsilons = doc.at("epsilons").get<std::vector<double>>();
    if (doc.contains("ks")) config.ks = doc.at("ks").get<std::vector<int>>();
    config.n = doc.value("n", config.n);
    config.datasets = doc.value("datasets", config.datasets);
    config.trials = doc.value("trials", config.trials);
    config.master_seed = doc.value("master_seed", config.master_seed);
    config.jobs = doc.value("jobs", config.jobs);
    if (doc.contains("algorithms")) {
      config.algorithms.clear();
      for (const auto& a : doc.at("algorithms")) config.algorithms.push_back(algorithm_from_json(a));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad config: ") + e.what());
  }
  validate(config);
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config " + path.string() + " is not JSON: " + e.what());
  }
  return config_from_json(doc);
}

}  // namespace secretary::cli
