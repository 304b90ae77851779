#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>

namespace secretary {

/// Mixes a sequence of structured indices into one 64-bit seed (splitmix64
/// finalizer chained over the words). Used for counter-based seeding: the
/// stream of a trial depends only on its coordinates, not on execution order.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> words);

/// Seeded random stream. Draws are built from raw 64-bit Mersenne Twister
/// output so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Exp(1) by inverse CDF, -ln(1 - u).
  double exponential();

  /// Uniform integer in [0, bound), unbiased (rejection sampling).
  std::uint64_t below(std::uint64_t bound);

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace secretary
