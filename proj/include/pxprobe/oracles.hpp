#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "pxprobe/geometry.hpp"

namespace pxprobe {

/// Answer of a proximity probe. `point` is always a member of the probed set.
struct NnAnswer {
  Point point;
  double distance = 0.0;
};

struct OracleStats {
  std::uint64_t exact_queries = 0;
  std::uint64_t ann_queries = 0;

  std::uint64_t total() const noexcept { return exact_queries + ann_queries; }
};

enum class OracleKind { kFiniteSet, kSphere, kBallUnion, kBoxBoundary };

std::string_view to_string(OracleKind kind);

/// Black-box access to a compact point set P through nearest-neighbor probes.
///
/// Implementations answer exact queries in closed form; `ann_query` may return
/// any point within a (1+eps) factor of the exact distance. The default ANN
/// answer is the exact one. Probe counters are atomic, so one oracle can be
/// shared across concurrent sessions; totals are exact once they all finish.
class NnOracle {
 public:
  NnOracle() = default;
  NnOracle(const NnOracle&) = delete;
  NnOracle& operator=(const NnOracle&) = delete;
  virtual ~NnOracle() = default;

  virtual OracleKind kind() const noexcept = 0;
  virtual std::size_t dim() const noexcept = 0;

  NnAnswer nn_query(const Point& q) const;
  NnAnswer ann_query(const Point& q, double eps) const;

  /// Axis-aligned bounding box of P as (low, high).
  virtual std::pair<Point, Point> bounds() const = 0;
  /// Whether x lies on P, up to `tol`.
  virtual bool contains(const Point& x, double tol = 1e-9) const = 0;

  OracleStats stats() const noexcept;
  void reset_stats() noexcept;

 protected:
  virtual NnAnswer nearest(const Point& q) const = 0;
  virtual NnAnswer approximate(const Point& q, double /*eps*/) const { return nearest(q); }

 private:
  void check_query(const Point& q) const;

  mutable std::atomic<std::uint64_t> exact_queries_{0};
  mutable std::atomic<std::uint64_t> ann_queries_{0};
};

/// Explicit finite point set, answered by brute force.
class FiniteSetOracle : public NnOracle {
 public:
  explicit FiniteSetOracle(std::vector<Point> points);

  OracleKind kind() const noexcept override { return OracleKind::kFiniteSet; }
  std::size_t dim() const noexcept override { return dim_; }
  std::pair<Point, Point> bounds() const override;
  bool contains(const Point& x, double tol = 1e-9) const override;

  const std::vector<Point>& points() const noexcept { return points_; }

 protected:
  NnAnswer nearest(const Point& q) const override;

 private:
  std::vector<Point> points_;
  std::size_t dim_ = 0;
};

/// Worst legal (1+eps)-ANN answer: among the points within (1+eps)·d* of q,
/// the one farthest from q (ties to the lexicographically smallest).
NnAnswer adversarial_ann_query(const FiniteSetOracle& base, const Point& q, double eps);

/// Finite set whose ANN queries always return the adversarial answer.
class AdversarialAnnOracle : public FiniteSetOracle {
 public:
  using FiniteSetOracle::FiniteSetOracle;

 protected:
  NnAnswer approximate(const Point& q, double eps) const override;
};

/// Sphere surface |x - center| = radius.
class SphereOracle : public NnOracle {
 public:
  SphereOracle(Point center, double radius);

  OracleKind kind() const noexcept override { return OracleKind::kSphere; }
  std::size_t dim() const noexcept override { return center_.dim(); }
  std::pair<Point, Point> bounds() const override;
  bool contains(const Point& x, double tol = 1e-9) const override;

  const Point& center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }

 protected:
  NnAnswer nearest(const Point& q) const override;

 private:
  Point center_;
  double radius_;
};

/// Union of solid closed balls.
class BallUnionOracle : public NnOracle {
 public:
  explicit BallUnionOracle(std::vector<Ball> balls);

  OracleKind kind() const noexcept override { return OracleKind::kBallUnion; }
  std::size_t dim() const noexcept override { return balls_.front().center.dim(); }
  std::pair<Point, Point> bounds() const override;
  bool contains(const Point& x, double tol = 1e-9) const override;

  const std::vector<Ball>& balls() const noexcept { return balls_; }

 protected:
  NnAnswer nearest(const Point& q) const override;

 private:
  std::vector<Ball> balls_;
};

/// Boundary of the axis-aligned box [low, high].
class BoxBoundaryOracle : public NnOracle {
 public:
  BoxBoundaryOracle(Point low, Point high);

  OracleKind kind() const noexcept override { return OracleKind::kBoxBoundary; }
  std::size_t dim() const noexcept override { return low_.dim(); }
  std::pair<Point, Point> bounds() const override { return {low_, high_}; }
  bool contains(const Point& x, double tol = 1e-9) const override;

  const Point& low() const noexcept { return low_; }
  const Point& high() const noexcept { return high_; }

 protected:
  NnAnswer nearest(const Point& q) const override;

 private:
  Point low_;
  Point high_;
};

}  // namespace pxprobe
