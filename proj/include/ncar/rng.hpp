#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ncar {

/// Seeded deterministic random source used by the dataset generators.
///
/// The bit stream is std::mt19937_64 (fully specified by the standard), and
/// the mappings below are fixed here instead of relying on std distributions,
/// whose output is implementation-defined:
///   uniform():  top 53 bits of one draw, scaled to [0, 1)
///   gaussian(): Box-Muller, consuming exactly two draws per sample
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal sample.
  double gaussian() {
    const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ncar
