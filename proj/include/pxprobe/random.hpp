#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "pxprobe/geometry.hpp"

namespace pxprobe {

/// Seeded generator with platform-independent output. The standard
/// distributions are implementation-defined, so the conversions are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  /// Uniform in [0, n).
  std::size_t index(std::size_t n);

  Point uniform_point(std::size_t dim, double lo = 0.0, double hi = 1.0);
  Point unit_vector(std::size_t dim);

  /// m distinct indices of [0, n), in increasing order.
  std::vector<std::size_t> sample(std::size_t n, std::size_t m);

 private:
  std::mt19937_64 engine_;
};

}  // namespace pxprobe
