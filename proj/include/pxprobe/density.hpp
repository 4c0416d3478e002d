#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pxprobe/cones.hpp"
#include "pxprobe/geometry.hpp"

namespace pxprobe {

/// Voronoi partition of P induced by a center subset C.
struct DensityClustering {
  std::vector<std::size_t> center_indices;  ///< positions of the centers in P, increasing
  std::vector<Point> centers;
  std::vector<std::size_t> assignment;  ///< per point of P: position in `centers`
  std::vector<std::size_t> cluster_sizes;  ///< per center
  std::size_t max_size = 0;
  std::size_t k = 0;  ///< balance target, 0 when none was requested
  std::size_t attempts = 0;
  std::uint64_t seed = 0;
  bool balanced = false;  ///< max_size <= k
};

/// Exact nearest-center assignment. Equal distances (within kTolerance) go
/// to the lexicographically smallest center, then to the lowest index.
DensityClustering voronoi_partition(std::span<const Point> points, std::span<const std::size_t> center_indices);

/// Same, with centers given as points; each must occur in P.
DensityClustering voronoi_partition(std::span<const Point> points, std::span<const Point> centers);

struct DensityOptions {
  bool planar = false;
  std::uint64_t seed = 0;
  /// Replaces the first sample size m_0; the doubling schedule is unchanged.
  std::optional<std::size_t> initial_sample;
};

/// Sample size m_0 used by k_density_centers.
std::size_t density_initial_sample(std::size_t n, std::size_t k, std::size_t dim, bool planar);

/// Sample-and-verify k-density clustering: draw a uniform subset of size m,
/// keep it if every Voronoi cluster has at most k points, otherwise double m.
/// k = 1 takes C = P directly. If even C = P is unbalanced (duplicate points)
/// the result is returned with `balanced` false.
DensityClustering k_density_centers(std::span<const Point> points, std::size_t k, const DensityOptions& options = {});

/// Points l_i e_i in R^n with l_i = sqrt(1 - 2^-(i+1)), i = 1..n.
std::vector<Point> counterexample_set(std::size_t n);

}  // namespace pxprobe
