#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pxprobe {

/// Absolute tolerance used by geometric predicates.
inline constexpr double kTolerance = 1e-12;

/// A point (or vector) in R^d. Comparison is lexicographic over coordinates,
/// which is also the tie-break order used by every nearest/extremal query.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim, double fill = 0.0) : coords_(dim, fill) {}
  Point(std::initializer_list<double> coords) : coords_(coords) {}
  explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {}

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }

  std::span<const double> coords() const noexcept { return coords_; }
  const std::vector<double>& values() const noexcept { return coords_; }

  bool is_finite() const noexcept;

  friend bool operator==(const Point&, const Point&) = default;
  friend std::partial_ordering operator<=>(const Point& a, const Point& b) {
    return a.coords_ <=> b.coords_;
  }

  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  Point& operator*=(double s);

 private:
  std::vector<double> coords_;
};

Point operator+(Point a, const Point& b);
Point operator-(Point a, const Point& b);
Point operator*(double s, Point a);
Point operator*(Point a, double s);

double dot(const Point& a, const Point& b);
double norm(const Point& a);
/// Returns a / |a|. Throws UsageError for the zero vector.
Point normalized(const Point& a);

/// Throws UsageError unless both points share a dimension.
void require_same_dim(const Point& a, const Point& b);

struct Ball {
  Point center;
  double radius = 0.0;

  /// Closed-ball membership.
  bool contains(const Point& x, double tol = kTolerance) const;
};

/// Circular cone {apex + t·u : angle(u, axis) <= half_angle}.
struct Cone {
  Point apex;
  Point axis;  ///< unit length
  double half_angle = 0.0;

  bool contains(const Point& x) const;
};

/// Axis-aligned hypercube [low, low + side]^d.
struct Cell {
  Point low;
  double side = 0.0;

  std::size_t dim() const noexcept { return low.dim(); }
  Point center() const;
  double diameter() const;
  /// Distance from x to the farthest corner of the cell.
  double max_distance(const Point& x) const;
  /// Distance from x to the cell (0 when x is inside).
  double min_distance(const Point& x) const;
  bool contains(const Point& x) const;
};

double dist(const Point& a, const Point& b);
double squared_dist(const Point& a, const Point& b);

struct SetDistance {
  double distance = 0.0;
  std::size_t index = 0;
};

/// Nearest member of `set` to q; equal distances (within kTolerance) resolve
/// to the lexicographically smallest member.
SetDistance dist_to_set(const Point& q, std::span<const Point> set);

struct SegmentProjection {
  Point point;
  double t = 0.0;  ///< point = (1 - t)·a + t·b
};

/// Closest point of segment ab to q. Degenerate a == b yields (a, 0).
SegmentProjection project_to_segment(const Point& q, const Point& a, const Point& b);

/// Signed coordinate s of the orthogonal projection of x onto the line
/// origin + s·dir. `dir` must be a unit vector.
double projection_along_ray(const Point& x, const Point& origin, const Point& dir);

/// True iff every corner of c lies in the closed ball b.
bool cell_inside_ball(const Cell& c, const Ball& b);

/// Largest pairwise distance (brute force).
double diameter(std::span<const Point> points);

}  // namespace pxprobe
