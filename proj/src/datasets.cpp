#include "pxprobe/datasets.hpp"

#include <algorithm>
#include <string>

#include "pxprobe/density.hpp"
#include "pxprobe/error.hpp"
#include "pxprobe/random.hpp"

namespace pxprobe {

std::vector<Point> generate_points(std::string_view shape, std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n < 1) throw UsageError("generate: n must be >= 1");
  if (shape == "counterexample") return counterexample_set(n);
  if (d < 1) throw UsageError("generate: dimension must be >= 1");
  Rng rng(seed);
  std::vector<Point> pts;
  pts.reserve(n);
  if (shape == "uniform") {
    for (std::size_t i = 0; i < n; ++i) pts.push_back(rng.uniform_point(d));
  } else if (shape == "circle") {
    if (d < 2) throw UsageError("generate: circle needs dimension >= 2");
    const Point center(d, 0.5);
    for (std::size_t i = 0; i < n; ++i) pts.push_back(center + 0.4 * rng.unit_vector(d));
  } else if (shape == "clusters") {
    const std::size_t groups = std::min<std::size_t>(n, 5);
    std::vector<Point> centers;
    for (std::size_t g = 0; g < groups; ++g) centers.push_back(rng.uniform_point(d, 0.15, 0.85));
    for (std::size_t i = 0; i < n; ++i) {
      Point p = centers[rng.index(groups)];
      for (std::size_t j = 0; j < d; ++j) p[j] = std::clamp(p[j] + 0.05 * rng.normal(), 0.0, 1.0);
      pts.push_back(std::move(p));
    }
  } else {
    throw UsageError("generate: unknown shape '" + std::string(shape) + "'");
  }
  return pts;
}

}  // namespace pxprobe
