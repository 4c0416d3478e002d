#include "pxprobe/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pxprobe/error.hpp"

namespace pxprobe {

namespace {

// Keeps `best` unless `cand` is strictly closer, or equally close and
// lexicographically smaller.
void take_closer(NnAnswer& best, NnAnswer cand) {
  if (cand.distance < best.distance - kTolerance ||
      (cand.distance <= best.distance + kTolerance && cand.point < best.point)) {
    best = std::move(cand);
  }
}

NnAnswer answer_for(const Point& q, Point p) {
  const double d = dist(q, p);
  return {std::move(p), d};
}

}  // namespace

std::string_view to_string(OracleKind kind) {
  switch (kind) {
    case OracleKind::kFiniteSet:
      return "finite-set";
    case OracleKind::kSphere:
      return "sphere";
    case OracleKind::kBallUnion:
      return "ball-union";
    case OracleKind::kBoxBoundary:
      return "box-boundary";
  }
  return "unknown";
}

void NnOracle::check_query(const Point& q) const {
  if (q.dim() != dim()) {
    throw UsageError("query dimension " + std::to_string(q.dim()) + " does not match oracle dimension " +
                     std::to_string(dim()));
  }
  if (!q.is_finite()) throw UsageError("query point has non-finite coordinates");
}

NnAnswer NnOracle::nn_query(const Point& q) const {
  check_query(q);
  exact_queries_.fetch_add(1, std::memory_order_relaxed);
  return nearest(q);
}

NnAnswer NnOracle::ann_query(const Point& q, double eps) const {
  check_query(q);
  if (!(eps >= 0.0)) throw UsageError("ann_query: eps must be non-negative");
  ann_queries_.fetch_add(1, std::memory_order_relaxed);
  return approximate(q, eps);
}

OracleStats NnOracle::stats() const noexcept {
  return {exact_queries_.load(std::memory_order_relaxed), ann_queries_.load(std::memory_order_relaxed)};
}

void NnOracle::reset_stats() noexcept {
  exact_queries_.store(0, std::memory_order_relaxed);
  ann_queries_.store(0, std::memory_order_relaxed);
}

// ---------------------------------------------------------------------------

FiniteSetOracle::FiniteSetOracle(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw UsageError("finite-set oracle needs at least one point");
  dim_ = points_.front().dim();
  if (dim_ == 0) throw UsageError("points must have dimension >= 1");
  for (const Point& p : points_) {
    if (p.dim() != dim_) throw UsageError("finite-set oracle: mixed point dimensions");
    if (!p.is_finite()) throw UsageError("finite-set oracle: non-finite coordinate");
  }
}

std::pair<Point, Point> FiniteSetOracle::bounds() const {
  Point lo = points_.front();
  Point hi = points_.front();
  for (const Point& p : points_) {
    for (std::size_t i = 0; i < dim_; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
  return {lo, hi};
}

bool FiniteSetOracle::contains(const Point& x, double tol) const {
  if (x.dim() != dim_) return false;
  return std::any_of(points_.begin(), points_.end(), [&](const Point& p) { return dist(p, x) <= tol; });
}

NnAnswer FiniteSetOracle::nearest(const Point& q) const {
  const SetDistance sd = dist_to_set(q, points_);
  return {points_[sd.index], sd.distance};
}

NnAnswer adversarial_ann_query(const FiniteSetOracle& base, const Point& q, double eps) {
  const auto& pts = base.points();
  const double exact = dist_to_set(q, pts).distance;
  const double limit = (1.0 + eps) * exact;
  const Point* worst = nullptr;
  double worst_d = -1.0;
  for (const Point& p : pts) {
    const double d = dist(q, p);
    if (d > limit) continue;
    if (d > worst_d || (d == worst_d && p < *worst)) {
      worst = &p;
      worst_d = d;
    }
  }
  // The exact neighbour always qualifies, so `worst` is set.
  return {*worst, worst_d};
}

NnAnswer AdversarialAnnOracle::approximate(const Point& q, double eps) const {
  return adversarial_ann_query(*this, q, eps);
}

// ---------------------------------------------------------------------------

SphereOracle::SphereOracle(Point center, double radius) : center_(std::move(center)), radius_(radius) {
  if (center_.dim() == 0) throw UsageError("sphere oracle: empty center");
  if (!center_.is_finite() || !std::isfinite(radius_) || radius_ < 0.0) {
    throw UsageError("sphere oracle: need a finite center and radius >= 0");
  }
}

std::pair<Point, Point> SphereOracle::bounds() const {
  Point lo = center_;
  Point hi = center_;
  for (std::size_t i = 0; i < lo.dim(); ++i) {
    lo[i] -= radius_;
    hi[i] += radius_;
  }
  return {lo, hi};
}

bool SphereOracle::contains(const Point& x, double tol) const {
  return x.dim() == dim() && std::abs(dist(x, center_) - radius_) <= tol;
}

NnAnswer SphereOracle::nearest(const Point& q) const {
  const Point v = q - center_;
  const double len = norm(v);
  if (len == 0.0) {
    // Every surface point is equidistant; take the lexicographically smallest.
    Point p = center_;
    p[0] -= radius_;
    return answer_for(q, std::move(p));
  }
  return answer_for(q, center_ + (radius_ / len) * v);
}

// ---------------------------------------------------------------------------

BallUnionOracle::BallUnionOracle(std::vector<Ball> balls) : balls_(std::move(balls)) {
  if (balls_.empty()) throw UsageError("ball-union oracle needs at least one ball");
  const std::size_t d = balls_.front().center.dim();
  if (d == 0) throw UsageError("ball-union oracle: empty center");
  for (const Ball& b : balls_) {
    if (b.center.dim() != d) throw UsageError("ball-union oracle: mixed dimensions");
    if (!b.center.is_finite() || !std::isfinite(b.radius) || b.radius < 0.0) {
      throw UsageError("ball-union oracle: need finite centers and radii >= 0");
    }
  }
}

std::pair<Point, Point> BallUnionOracle::bounds() const {
  Point lo(dim(), std::numeric_limits<double>::infinity());
  Point hi(dim(), -std::numeric_limits<double>::infinity());
  for (const Ball& b : balls_) {
    for (std::size_t i = 0; i < dim(); ++i) {
      lo[i] = std::min(lo[i], b.center[i] - b.radius);
      hi[i] = std::max(hi[i], b.center[i] + b.radius);
    }
  }
  return {lo, hi};
}

bool BallUnionOracle::contains(const Point& x, double tol) const {
  if (x.dim() != dim()) return false;
  return std::any_of(balls_.begin(), balls_.end(), [&](const Ball& b) { return b.contains(x, tol); });
}

NnAnswer BallUnionOracle::nearest(const Point& q) const {
  NnAnswer best{Point{}, std::numeric_limits<double>::infinity()};
  for (const Ball& b : balls_) {
    const Point v = q - b.center;
    const double len = norm(v);
    NnAnswer cand;
    if (len <= b.radius) {
      cand = {q, 0.0};
    } else {
      cand = answer_for(q, b.center + (b.radius / len) * v);
    }
    if (best.point.dim() == 0) {
      best = std::move(cand);
    } else {
      take_closer(best, std::move(cand));
    }
  }
  return best;
}

// ---------------------------------------------------------------------------

BoxBoundaryOracle::BoxBoundaryOracle(Point low, Point high) : low_(std::move(low)), high_(std::move(high)) {
  require_same_dim(low_, high_);
  if (low_.dim() == 0) throw UsageError("box-boundary oracle: empty corner");
  if (!low_.is_finite() || !high_.is_finite()) throw UsageError("box-boundary oracle: non-finite corner");
  for (std::size_t i = 0; i < low_.dim(); ++i) {
    if (low_[i] > high_[i]) throw UsageError("box-boundary oracle: low corner exceeds high corner");
  }
}

bool BoxBoundaryOracle::contains(const Point& x, double tol) const {
  if (x.dim() != dim()) return false;
  bool on_face = false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] < low_[i] - tol || x[i] > high_[i] + tol) return false;
    if (std::abs(x[i] - low_[i]) <= tol || std::abs(x[i] - high_[i]) <= tol) on_face = true;
  }
  return on_face;
}

NnAnswer BoxBoundaryOracle::nearest(const Point& q) const {
  bool inside = true;
  Point clamped = q;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (q[i] < low_[i] || q[i] > high_[i]) inside = false;
    clamped[i] = std::clamp(q[i], low_[i], high_[i]);
  }
  // Outside the box the clamp already lies on the boundary.
  if (!inside) return answer_for(q, std::move(clamped));

  NnAnswer best{Point{}, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < dim(); ++i) {
    for (const double face : {low_[i], high_[i]}) {
      Point p = q;
      p[i] = face;
      NnAnswer cand = answer_for(q, std::move(p));
      if (best.point.dim() == 0) {
        best = std::move(cand);
      } else {
        take_closer(best, std::move(cand));
      }
    }
  }
  return best;
}

}  // namespace pxprobe
