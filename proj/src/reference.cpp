#include "pxprobe/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

#include "pxprobe/error.hpp"

namespace pxprobe::reference {

namespace {

void require_nonempty(std::span<const Point> points, const char* what) {
  if (points.empty()) throw UsageError(std::string(what) + ": empty point set");
}

double cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double segment_distance(const Point& q, const Point& a, const Point& b) {
  return dist(q, project_to_segment(q, a, b).point);
}

}  // namespace

GonzalezResult gonzalez(std::span<const Point> points, std::size_t k) {
  const std::size_t n = points.size();
  if (k < 1 || k > n) throw UsageError("gonzalez: k must lie in [1, n]");

  std::size_t first = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (points[i] < points[first]) first = i;
  }

  GonzalezResult out;
  std::vector<double> gap(n, std::numeric_limits<double>::infinity());
  std::size_t next = first;
  for (std::size_t step = 0; step < k; ++step) {
    out.centers.push_back(points[next]);
    out.indices.push_back(next);
    for (std::size_t i = 0; i < n; ++i) gap[i] = std::min(gap[i], dist(points[i], points[next]));

    std::size_t far = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (gap[i] > gap[far] || (gap[i] == gap[far] && points[i] < points[far])) far = i;
    }
    out.radii.push_back(gap[far]);
    next = far;
  }
  return out;
}

double covering_radius(std::span<const Point> points, std::span<const Point> centers) {
  require_nonempty(centers, "covering_radius");
  double r = 0.0;
  for (const Point& p : points) r = std::max(r, dist_to_set(p, centers).distance);
  return r;
}

Point exact_extremal(std::span<const Point> points, const Point& v) {
  require_nonempty(points, "exact_extremal");
  std::size_t best = 0;
  double best_val = dot(points[0], v);
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double val = dot(points[i], v);
    if (val > best_val + kTolerance || (val >= best_val - kTolerance && points[i] < points[best])) {
      best = i;
      best_val = std::max(best_val, val);
    }
  }
  return points[best];
}

Point brute_force_nn(std::span<const Point> points, const Point& q) {
  require_nonempty(points, "brute_force_nn");
  std::size_t best = 0;
  double best_d = dist(q, points[0]);
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double d = dist(q, points[i]);
    if (d < best_d - kTolerance || (d <= best_d + kTolerance && points[i] < points[best])) {
      best = i;
      best_d = std::min(best_d, d);
    }
  }
  return points[best];
}

std::vector<Point> convex_hull_2d(std::span<const Point> points) {
  std::vector<Point> pts(points.begin(), points.end());
  for (const Point& p : pts) {
    if (p.dim() != 2) throw UsageError("convex_hull_2d: points must be planar");
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;

  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

HullDistance hull_distance_iterative(const Point& q, std::span<const Point> points, double tolerance) {
  require_nonempty(points, "hull_distance_iterative");
  const std::size_t n = points.size();
  const std::size_t d = q.dim();

  std::vector<Eigen::VectorXd> shifted(n, Eigen::VectorXd(d));
  double scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    require_same_dim(q, points[i]);
    for (std::size_t j = 0; j < d; ++j) shifted[i][j] = points[i][j] - q[j];
    scale = std::max(scale, shifted[i].norm());
  }
  const double tol = tolerance * scale;

  std::size_t start = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (shifted[i].squaredNorm() < shifted[start].squaredNorm()) start = i;
  }
  std::vector<std::size_t> corral{start};
  std::vector<double> lambda{1.0};
  Eigen::VectorXd x = shifted[start];

  auto rebuild_x = [&] {
    x.setZero();
    for (std::size_t i = 0; i < corral.size(); ++i) x += lambda[i] * shifted[corral[i]];
  };

  // Minimum-norm point of the affine hull of the corral, as affine weights.
  auto affine_minimizer = [&]() {
    const auto m = static_cast<Eigen::Index>(corral.size());
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(m + 1, m + 1);
    for (Eigen::Index a = 0; a < m; ++a) {
      for (Eigen::Index b = 0; b < m; ++b) kkt(a, b) = shifted[corral[a]].dot(shifted[corral[b]]);
      kkt(a, m) = 1.0;
      kkt(m, a) = 1.0;
    }
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
    rhs(m) = 1.0;
    const Eigen::VectorXd sol = kkt.completeOrthogonalDecomposition().solve(rhs);
    std::vector<double> mu(corral.size());
    double total = 0.0;
    for (Eigen::Index a = 0; a < m; ++a) total += (mu[a] = sol(a));
    if (std::abs(total) > 0.0) {
      for (double& v : mu) v /= total;
    }
    return mu;
  };

  HullDistance out;
  const std::size_t max_major = 100 * (n + d) + 1000;
  for (out.iterations = 0; out.iterations < max_major; ++out.iterations) {
    const double xnorm = x.norm();
    std::size_t j = 0;
    double val = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const double v = x.dot(shifted[i]);
      if (v < val) {
        val = v;
        j = i;
      }
    }
    if (xnorm > 0.0) out.lower_bound = std::max(out.lower_bound, std::max(0.0, val / xnorm));
    if (xnorm - out.lower_bound <= tol) {
      out.converged = true;
      break;
    }
    if (std::find(corral.begin(), corral.end(), j) != corral.end()) break;

    corral.push_back(j);
    lambda.push_back(0.0);
    while (true) {
      const std::vector<double> mu = affine_minimizer();
      bool interior = true;
      for (double v : mu) interior = interior && v > 1e-14;
      if (interior) {
        lambda = mu;
        rebuild_x();
        break;
      }
      double theta = 1.0;
      std::size_t drop = 0;
      for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] <= 1e-14) {
          const double ratio = lambda[i] / (lambda[i] - mu[i]);
          if (ratio < theta) {
            theta = ratio;
            drop = i;
          }
        }
      }
      for (std::size_t i = 0; i < lambda.size(); ++i) lambda[i] = (1.0 - theta) * lambda[i] + theta * mu[i];
      lambda[drop] = 0.0;
      std::vector<std::size_t> kept_idx;
      std::vector<double> kept_w;
      for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] > 1e-15) {
          kept_idx.push_back(corral[i]);
          kept_w.push_back(lambda[i]);
        }
      }
      const double total = std::accumulate(kept_w.begin(), kept_w.end(), 0.0);
      for (double& w : kept_w) w /= total;
      corral = std::move(kept_idx);
      lambda = std::move(kept_w);
      rebuild_x();
      if (corral.size() == 1) break;
    }
  }

  out.distance = x.norm();
  out.lower_bound = std::min(out.lower_bound, out.distance);
  out.weights.assign(n, 0.0);
  out.nearest = Point(d, 0.0);
  for (std::size_t i = 0; i < corral.size(); ++i) {
    out.weights[corral[i]] = lambda[i];
    out.nearest += lambda[i] * points[corral[i]];
  }
  return out;
}

double exact_hull_distance(const Point& q, std::span<const Point> points) {
  require_nonempty(points, "exact_hull_distance");
  for (const Point& p : points) require_same_dim(q, p);

  if (q.dim() == 1) {
    double lo = points[0][0];
    double hi = lo;
    for (const Point& p : points) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    return std::max({0.0, lo - q[0], q[0] - hi});
  }

  if (q.dim() == 2) {
    const std::vector<Point> hull = convex_hull_2d(points);
    if (hull.size() == 1) return dist(q, hull[0]);
    if (hull.size() == 2) return segment_distance(q, hull[0], hull[1]);
    bool inside = true;
    for (std::size_t i = 0; i < hull.size() && inside; ++i) {
      inside = cross(hull[i], hull[(i + 1) % hull.size()], q) >= 0.0;
    }
    if (inside) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
      best = std::min(best, segment_distance(q, hull[i], hull[(i + 1) % hull.size()]));
    }
    return best;
  }

  return hull_distance_iterative(q, points).distance;
}

}  // namespace pxprobe::reference
