#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "secretary/core.hpp"

namespace secretary {

enum class GeneratorKind { kUniform, kAdversarial, kAlmostConstant };

std::string_view to_string(GeneratorKind kind);
/// Accepts "uniform", "adversarial", "almost-constant".
GeneratorKind parse_generator_kind(std::string_view name);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kUniform;
  int n = 100;
  int k = 1;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument when the spec cannot produce an instance
/// (bad sizes, epsilon outside [0,1], Almost-Constant at epsilon = 1).
void validate(const GeneratorSpec& spec);
bool is_valid(const GeneratorSpec& spec);

/// v ~ Exp(1); v-hat = delta * v with delta ~ U[1-eps, 1+eps].
Instance gen_uniform(const GeneratorSpec& spec);

/// v ~ Exp(1); the top ceil(n/2) actual values are predicted as (1-eps)v and
/// the rest as (1+eps)v.
Instance gen_adversarial(const GeneratorSpec& spec);

/// Predictions 1 + eta; k random candidates have actual 1/(1-eps) + eta, the
/// rest 1 + eta. One eta ~ U[0, 0.01] per candidate is shared by its actual
/// and predicted value, so eps = 0 yields exact predictions.
Instance gen_almost_constant(const GeneratorSpec& spec);

Instance generate(const GeneratorSpec& spec);

/// "{kind}_{eps}_{seed}.json", eps printed with two decimals.
std::string dataset_file_name(const GeneratorSpec& spec);

}  // namespace secretary
