#include "sketchlab/rng.hpp"

#include <cmath>

namespace sketchlab {

double Rng::normal(double mean, double stddev) {
  // u1 in (0, 1] so the log is finite.
  double u1 = 1.0 - uniform();
  double u2 = uniform();
  double radius = std::sqrt(-2.0 * std::log(u1));
  return mean + stddev * radius * std::cos(2.0 * M_PI * u2);
}

std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t seed) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t fnv1a64_str(const std::string& text, std::uint64_t seed) {
  return fnv1a64(text.data(), text.size(), seed);
}

std::uint64_t derive_seed(std::uint64_t base, const std::string& key) {
  unsigned char base_bytes[8];
  for (int i = 0; i < 8; ++i) {
    base_bytes[i] = static_cast<unsigned char>((base >> (8 * i)) & 0xff);
  }
  std::uint64_t h = fnv1a64(base_bytes, sizeof(base_bytes));
  return fnv1a64(key.data(), key.size(), h);
}

}  // namespace sketchlab
