#include "pxprobe/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pxprobe/error.hpp"
#include "pxprobe/random.hpp"

namespace pxprobe {

namespace {

void check_points(std::span<const Point> points) {
  if (points.empty()) throw UsageError("density: empty point set");
  for (const Point& p : points) require_same_dim(p, points.front());
}

}  // namespace

DensityClustering voronoi_partition(std::span<const Point> points, std::span<const std::size_t> center_indices) {
  check_points(points);
  if (center_indices.empty()) throw UsageError("voronoi_partition: empty center set");
  std::vector<std::size_t> idx(center_indices.begin(), center_indices.end());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (idx.back() >= points.size()) throw UsageError("voronoi_partition: center index out of range");

  DensityClustering out;
  out.center_indices = idx;
  out.centers.reserve(idx.size());
  for (std::size_t i : idx) out.centers.push_back(points[i]);
  out.cluster_sizes.assign(idx.size(), 0);
  out.assignment.resize(points.size());

  for (std::size_t p = 0; p < points.size(); ++p) {
    std::size_t best = 0;
    double best_d = dist(points[p], out.centers[0]);
    for (std::size_t c = 1; c < out.centers.size(); ++c) {
      const double d = dist(points[p], out.centers[c]);
      if (d < best_d - kTolerance || (d <= best_d + kTolerance && out.centers[c] < out.centers[best])) {
        best = c;
        best_d = std::min(best_d, d);
      }
    }
    out.assignment[p] = best;
    ++out.cluster_sizes[best];
  }
  out.max_size = *std::max_element(out.cluster_sizes.begin(), out.cluster_sizes.end());
  return out;
}

DensityClustering voronoi_partition(std::span<const Point> points, std::span<const Point> centers) {
  check_points(points);
  std::vector<std::size_t> idx;
  idx.reserve(centers.size());
  for (const Point& c : centers) {
    const auto it = std::find(points.begin(), points.end(), c);
    if (it == points.end()) throw UsageError("voronoi_partition: center is not a point of P");
    idx.push_back(static_cast<std::size_t>(it - points.begin()));
  }
  return voronoi_partition(points, std::span<const std::size_t>(idx));
}

std::size_t density_initial_sample(std::size_t n, std::size_t k, std::size_t dim, bool planar) {
  if (k < 1 || k > n) throw UsageError("density: k must lie in [1, n]");
  const double cones = cone_cover_size(std::max<std::size_t>(dim, 2), std::numbers::pi / 3.0);
  const double eps = static_cast<double>(k) / (cones * static_cast<double>(n));
  const double m = planar ? std::ceil(4.0 / eps) : std::ceil((1.0 / eps) * std::log(1.0 / eps + std::numbers::e));
  return m >= static_cast<double>(n) ? n : static_cast<std::size_t>(m);
}

DensityClustering k_density_centers(std::span<const Point> points, std::size_t k, const DensityOptions& options) {
  check_points(points);
  const std::size_t n = points.size();
  if (k < 1 || k > n) {
    throw UsageError("k_density_centers: k=" + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  }

  auto finish = [&](DensityClustering c, std::size_t attempts) {
    c.k = k;
    c.attempts = attempts;
    c.seed = options.seed;
    c.balanced = c.max_size <= k;
    return c;
  };

  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  if (k == 1) return finish(voronoi_partition(points, std::span<const std::size_t>(all)), 1);

  std::size_t m = options.initial_sample ? *options.initial_sample
                                         : density_initial_sample(n, k, points.front().dim(), options.planar);
  m = std::clamp<std::size_t>(m, 1, n);

  Rng rng(options.seed);
  std::size_t attempts = 0;
  while (true) {
    ++attempts;
    const std::vector<std::size_t> sample = m == n ? all : rng.sample(n, m);
    DensityClustering c = voronoi_partition(points, std::span<const std::size_t>(sample));
    if (c.max_size <= k || m == n) return finish(std::move(c), attempts);
    m = std::min(n, 2 * m);
  }
}

std::vector<Point> counterexample_set(std::size_t n) {
  if (n < 2) throw UsageError("counterexample_set: n must be >= 2");
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    Point p(n, 0.0);
    p[i - 1] = std::sqrt(1.0 - std::ldexp(1.0, -static_cast<int>(i) - 1));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace pxprobe
