#include "pxprobe/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pxprobe/error.hpp"

namespace pxprobe {

std::size_t hull_iteration_budget(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw UsageError("hull: eps must lie in (0, 1]");
  const double quadratic = std::ceil(8.0 / (eps * eps));
  const double epochs = std::ceil(std::log2(1.0 / eps));
  return static_cast<std::size_t>(quadratic) + static_cast<std::size_t>(std::max(0.0, epochs));
}

HullConfig make_hull_config(double eps, double delta_big) {
  if (!(eps > 0.0 && eps <= 1.0)) throw UsageError("hull: eps must lie in (0, 1]");
  if (!(delta_big > 0.0) || !std::isfinite(delta_big)) throw UsageError("hull: delta_big must be positive");
  HullConfig cfg;
  cfg.eps = eps;
  cfg.delta_big = delta_big;
  cfg.max_iters = hull_iteration_budget(eps);
  cfg.tau = 32.0 * delta_big / eps;
  cfg.delta_small = (eps * eps) / ((32.0 - eps) * (32.0 - eps));
  return cfg;
}

double delta_big_from_estimate(const DiameterEstimate& estimate) {
  const double bound = 3.0 * estimate.estimate;
  if (!(bound > 0.0)) throw UsageError("hull: diameter estimate is zero; pass delta_big explicitly");
  return bound;
}

std::string_view to_string(Verdict v) { return v == Verdict::kIn ? "In" : "Out"; }

std::string_view to_string(HullMode m) {
  switch (m) {
    case HullMode::kExactExtremal:
      return "exact-extremal";
    case HullMode::kApproxExtremal:
      return "approx-extremal";
    case HullMode::kAnn:
      return "ann";
  }
  return "unknown";
}

std::string_view to_string(ExtremalKind k) {
  switch (k) {
    case ExtremalKind::kExact:
      return "exact";
    case ExtremalKind::kApprox:
      return "approx";
    case ExtremalKind::kAnnDerived:
      return "ann-derived";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------

ExtremalAnswer ExtremalOracle::extremal(const Point& direction) const {
  if (direction.dim() != dim()) throw UsageError("extremal: direction dimension mismatch");
  probes_.fetch_add(1, std::memory_order_relaxed);
  return answer(direction);
}

namespace {

std::vector<Point> checked_points(std::vector<Point> points, const char* who) {
  if (points.empty()) throw UsageError(std::string(who) + ": empty point set");
  for (const Point& p : points) {
    require_same_dim(p, points.front());
    if (!p.is_finite()) throw UsageError(std::string(who) + ": non-finite coordinate");
  }
  return points;
}

}  // namespace

FiniteExtremalOracle::FiniteExtremalOracle(std::vector<Point> points)
    : points_(checked_points(std::move(points), "FiniteExtremalOracle")) {}

ExtremalAnswer FiniteExtremalOracle::answer(const Point& direction) const {
  std::size_t best = 0;
  double best_val = dot(points_[0], direction);
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const double v = dot(points_[i], direction);
    if (v > best_val + kTolerance || (v >= best_val - kTolerance && points_[i] < points_[best])) {
      best = i;
      best_val = std::max(best_val, v);
    }
  }
  return {points_[best], ExtremalKind::kExact};
}

AdversarialExtremalOracle::AdversarialExtremalOracle(std::vector<Point> points, double slack)
    : points_(checked_points(std::move(points), "AdversarialExtremalOracle")), slack_(slack) {
  if (!(slack_ >= 0.0)) throw UsageError("AdversarialExtremalOracle: slack must be >= 0");
  diameter_ = diameter(points_);
}

ExtremalAnswer AdversarialExtremalOracle::answer(const Point& direction) const {
  double top = -std::numeric_limits<double>::infinity();
  for (const Point& p : points_) top = std::max(top, dot(p, direction));
  const double floor = top - slack_ * diameter_;
  const Point* worst = nullptr;
  double worst_val = std::numeric_limits<double>::infinity();
  for (const Point& p : points_) {
    const double v = dot(p, direction);
    if (v < floor) continue;
    if (v < worst_val || (v == worst_val && p < *worst)) {
      worst = &p;
      worst_val = v;
    }
  }
  return {*worst, ExtremalKind::kApprox};
}

// ---------------------------------------------------------------------------

namespace {

class Descent {
 public:
  Descent(const Point& q, HullMode mode, const HullConfig& cfg, std::size_t budget) : q_(q) {
    run_.mode = mode;
    run_.budget = budget;
    run_.eps = cfg.eps;
    run_.delta_big = cfg.delta_big;
    run_.delta_small = cfg.delta_small;
    run_.tau = cfg.tau;
  }

  /// `probe(p, dir)` returns the extremal answer for unit direction dir.
  template <class Probe>
  HullRun run(const Point& start, double out_margin, double out_slack, Probe&& probe) {
    run_.probes = 1;
    run_.support.push_back(start);
    weights_.push_back(1.0);
    Point p = start;
    record(p);

    const double in_threshold = 0.5 * run_.eps * run_.delta_big;
    while (true) {
      ++run_.iterations;
      const double d = dist(p, q_);
      if (d <= in_threshold) {
        run_.verdict = Verdict::kIn;
        run_.certificate.witness = p;
        break;
      }
      if (run_.probes >= run_.budget) {
        run_.verdict = Verdict::kOut;
        run_.budget_exhausted = true;
        break;
      }
      const Point dir = (1.0 / d) * (q_ - p);
      ExtremalAnswer z = probe(p, dir);
      ++run_.probes;
      const double s = projection_along_ray(z.point, p, dir);
      if (s < d - out_margin) {
        run_.verdict = Verdict::kOut;
        run_.certificate.direction = dir;
        run_.certificate.support_value = dot(dir, z.point);
        run_.certificate.slack = out_slack;
        run_.certificate.query_value = dot(dir, q_);
        break;
      }
      const SegmentProjection proj = project_to_segment(q_, p, z.point);
      const std::size_t idx = support_index(z.point);
      for (double& w : weights_) w *= (1.0 - proj.t);
      weights_[idx] += proj.t;
      p = proj.point;
      record(p);
    }
    return std::move(run_);
  }

 private:
  std::size_t support_index(const Point& z) {
    const auto it = std::find(run_.support.begin(), run_.support.end(), z);
    if (it != run_.support.end()) return static_cast<std::size_t>(it - run_.support.begin());
    run_.support.push_back(z);
    weights_.push_back(0.0);
    return run_.support.size() - 1;
  }

  void record(const Point& p) { run_.iterates.push_back(HullIterate{p, dist(p, q_), weights_}); }

  const Point& q_;
  HullRun run_;
  std::vector<double> weights_;
};

void check_query(const Point& q, std::size_t dim) {
  if (q.dim() != dim) {
    throw UsageError("hull: query dimension " + std::to_string(q.dim()) + " does not match " + std::to_string(dim));
  }
  if (!q.is_finite()) throw UsageError("hull: query has non-finite coordinates");
}

Point unit_axis(std::size_t dim, std::size_t axis) {
  Point e(dim, 0.0);
  e[axis] = 1.0;
  return e;
}

}  // namespace

HullRun membership_exact(const Point& q, const ExtremalOracle& extremal, const HullConfig& cfg) {
  check_query(q, extremal.dim());
  Descent descent(q, HullMode::kExactExtremal, cfg, cfg.max_iters);
  const Point start = extremal.extremal(unit_axis(q.dim(), 0)).point;
  return descent.run(start, kTolerance, 0.0,
                     [&](const Point&, const Point& dir) { return extremal.extremal(dir); });
}

HullRun membership_approx_extremal(const Point& q, const ExtremalOracle& extremal, const HullConfig& cfg) {
  check_query(q, extremal.dim());
  Descent descent(q, HullMode::kApproxExtremal, cfg, 4 * cfg.max_iters);
  const Point start = extremal.extremal(unit_axis(q.dim(), 0)).point;
  const double margin = 0.25 * cfg.eps * cfg.delta_big;
  return descent.run(start, margin, margin, [&](const Point&, const Point& dir) { return extremal.extremal(dir); });
}

ExtremalAnswer ann_extremal(const Point& p_prev, const Point& q, const NnOracle& ann, const HullConfig& cfg) {
  require_same_dim(p_prev, q);
  const Point dir = normalized(q - p_prev);
  const Point far = p_prev + cfg.tau * dir;
  return {ann.ann_query(far, cfg.delta_small).point, ExtremalKind::kAnnDerived};
}

HullRun membership_ann(const Point& q, const NnOracle& ann, const HullConfig& cfg) {
  check_query(q, ann.dim());
  Descent descent(q, HullMode::kAnn, cfg, 4 * cfg.max_iters);
  // Any point of P will do as a start: take the ANN answer for a far point on
  // the -e_1 side of the domain center.
  Point far(q.dim(), 0.5);
  far[0] -= cfg.tau;
  const Point start = ann.ann_query(far, cfg.delta_small).point;
  const double margin = 0.25 * cfg.eps * cfg.delta_big;
  return descent.run(start, margin, margin, [&](const Point& p, const Point& dir) {
    // q - p is parallel to dir, so this places the probe tau away along dir.
    return ann_extremal(p, p + dir, ann, cfg);
  });
}

}  // namespace pxprobe
