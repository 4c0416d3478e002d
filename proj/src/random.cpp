#include "pxprobe/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "pxprobe/error.hpp"

namespace pxprobe {

double Rng::normal() {
  // Box-Muller; 1 - u keeps the logarithm finite.
  const double u = 1.0 - uniform();
  const double v = uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

std::size_t Rng::index(std::size_t n) {
  if (n == 0) throw UsageError("Rng::index: empty range");
  // Rejection sampling avoids modulo bias.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return static_cast<std::size_t>(x % n);
}

Point Rng::uniform_point(std::size_t dim, double lo, double hi) {
  Point p(dim);
  for (std::size_t i = 0; i < dim; ++i) p[i] = uniform(lo, hi);
  return p;
}

Point Rng::unit_vector(std::size_t dim) {
  while (true) {
    Point v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = normal();
    const double n = norm(v);
    if (n > 1e-12) return (1.0 / n) * v;
  }
}

std::vector<std::size_t> Rng::sample(std::size_t n, std::size_t m) {
  if (m > n) throw UsageError("Rng::sample: sample larger than population");
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < m; ++i) std::swap(idx[i], idx[i + index(n - i)]);
  idx.resize(m);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace pxprobe
