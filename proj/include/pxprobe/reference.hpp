#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pxprobe/geometry.hpp"

namespace pxprobe::reference {

/// Prefix of the greedy (farthest-point) permutation of an explicit set.
struct GonzalezResult {
  std::vector<Point> centers;
  std::vector<std::size_t> indices;  ///< positions of `centers` in the input
  /// radii[i] = max_p dist_to_set(p, centers[0..i]); non-increasing.
  std::vector<double> radii;
};

/// Greedy k-center starting from the lexicographically smallest point. The
/// final radius r_k satisfies r_k / 2 <= r_opt(k) <= r_k.
GonzalezResult gonzalez(std::span<const Point> points, std::size_t k);

/// max_p dist_to_set(p, centers).
double covering_radius(std::span<const Point> points, std::span<const Point> centers);

/// argmax_p <v, p>, ties to the lexicographically smallest point.
Point exact_extremal(std::span<const Point> points, const Point& v);

/// Brute-force nearest neighbour; ties to the lexicographically smallest point.
Point brute_force_nn(std::span<const Point> points, const Point& q);

/// Vertices of the planar convex hull in counter-clockwise order (monotone
/// chain). Collinear boundary points are dropped.
std::vector<Point> convex_hull_2d(std::span<const Point> points);

/// Result of the minimum-norm-point iteration on hull(P) - q.
struct HullDistance {
  double distance = 0.0;     ///< |x| for the final iterate x (an upper bound)
  double lower_bound = 0.0;  ///< from the best separating direction seen
  Point nearest;             ///< q + x, a point of hull(P)
  std::vector<double> weights;  ///< convex weights over the input points
  std::size_t iterations = 0;
  bool converged = false;
};

/// Wolfe's minimum-norm-point algorithm, usable in any dimension.
HullDistance hull_distance_iterative(const Point& q, std::span<const Point> points,
                                     double tolerance = 1e-10);

/// Distance from q to conv(P); 0 when q is inside. Exact polygon geometry in
/// the plane, `hull_distance_iterative` otherwise.
double exact_hull_distance(const Point& q, std::span<const Point> points);

}  // namespace pxprobe::reference
