#include "pxprobe/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pxprobe/error.hpp"

namespace pxprobe {

bool Point::is_finite() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](double v) { return std::isfinite(v); });
}

Point& Point::operator+=(const Point& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Point& Point::operator*=(double s) {
  for (double& v : coords_) v *= s;
  return *this;
}

Point operator+(Point a, const Point& b) { return a += b; }
Point operator-(Point a, const Point& b) { return a -= b; }
Point operator*(double s, Point a) { return a *= s; }
Point operator*(Point a, double s) { return a *= s; }

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw UsageError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()));
  }
}

double dot(const Point& a, const Point& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Point& a) {
  double s = 0.0;
  for (double v : a.coords()) s += v * v;
  return std::sqrt(s);
}

Point normalized(const Point& a) {
  const double n = norm(a);
  if (!(n > 0.0)) throw UsageError("cannot normalize the zero vector");
  return (1.0 / n) * a;
}

double squared_dist(const Point& a, const Point& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double t = a[i] - b[i];
    s += t * t;
  }
  return s;
}

double dist(const Point& a, const Point& b) { return std::sqrt(squared_dist(a, b)); }

bool Ball::contains(const Point& x, double tol) const { return dist(center, x) <= radius + tol; }

bool Cone::contains(const Point& x) const {
  const Point u = x - apex;
  const double len = norm(u);
  if (len == 0.0) return true;
  const double c = std::clamp(dot(u, axis) / len, -1.0, 1.0);
  return std::acos(c) <= half_angle + kTolerance;
}

Point Cell::center() const {
  Point c = low;
  for (std::size_t i = 0; i < c.dim(); ++i) c[i] += 0.5 * side;
  return c;
}

double Cell::diameter() const { return side * std::sqrt(static_cast<double>(dim())); }

double Cell::max_distance(const Point& x) const {
  require_same_dim(low, x);
  double s = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) {
    const double t = std::max(std::abs(x[i] - low[i]), std::abs(low[i] + side - x[i]));
    s += t * t;
  }
  return std::sqrt(s);
}

double Cell::min_distance(const Point& x) const {
  require_same_dim(low, x);
  double s = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) {
    double t = 0.0;
    if (x[i] < low[i]) {
      t = low[i] - x[i];
    } else if (x[i] > low[i] + side) {
      t = x[i] - low[i] - side;
    }
    s += t * t;
  }
  return std::sqrt(s);
}

bool Cell::contains(const Point& x) const { return min_distance(x) == 0.0; }

SetDistance dist_to_set(const Point& q, std::span<const Point> set) {
  if (set.empty()) throw UsageError("dist_to_set: empty set");
  SetDistance best{dist(q, set[0]), 0};
  for (std::size_t i = 1; i < set.size(); ++i) {
    const double d = dist(q, set[i]);
    if (d < best.distance - kTolerance ||
        (d <= best.distance + kTolerance && set[i] < set[best.index])) {
      best = {d, i};
    }
  }
  return best;
}

SegmentProjection project_to_segment(const Point& q, const Point& a, const Point& b) {
  require_same_dim(q, a);
  require_same_dim(a, b);
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return {a, 0.0};
  const double t = std::clamp(dot(q - a, ab) / len2, 0.0, 1.0);
  // Exact endpoints keep certificates free of rounding at the clamp.
  if (t == 0.0) return {a, 0.0};
  if (t == 1.0) return {b, 1.0};
  return {a + t * ab, t};
}

double projection_along_ray(const Point& x, const Point& origin, const Point& dir) {
  return dot(x - origin, dir);
}

bool cell_inside_ball(const Cell& c, const Ball& b) {
  return c.max_distance(b.center) <= b.radius + kTolerance;
}

double diameter(std::span<const Point> points) {
  double best = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::max(best, squared_dist(points[i], points[j]));
    }
  }
  return std::sqrt(best);
}

}  // namespace pxprobe
