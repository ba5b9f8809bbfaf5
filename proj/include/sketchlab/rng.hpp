#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace sketchlab {

// Deterministic random stream. std::normal_distribution is not portable
// across standard libraries, so gaussian sampling is done by hand here;
// identical seeds must reproduce identical streams everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound), bound >= 1. Modulo bias is negligible
  // for the small bounds used here and keeps the draw count fixed.
  std::uint64_t uniform_index(std::uint64_t bound) {
    return engine_() % bound;
  }

  // Box-Muller; consumes exactly two uniforms per sample.
  double normal(double mean, double stddev);

 private:
  std::mt19937_64 engine_;
};

// FNV-1a over arbitrary bytes; used to derive per-item seeds and to key
// deterministic mock outputs.
std::uint64_t fnv1a64(const void* data, std::size_t size,
                      std::uint64_t seed = 0xcbf29ce484222325ULL);
std::uint64_t fnv1a64_str(const std::string& text,
                          std::uint64_t seed = 0xcbf29ce484222325ULL);

// Combine a base seed with a textual key into a new stream seed.
std::uint64_t derive_seed(std::uint64_t base, const std::string& key);

}  // namespace sketchlab
