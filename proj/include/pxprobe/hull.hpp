#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pxprobe/explorer.hpp"
#include "pxprobe/geometry.hpp"
#include "pxprobe/oracles.hpp"

namespace pxprobe {

/// Parameters of the approximate hull-membership descent.
///
/// `delta_big` is a diameter bound with diam(P) <= delta_big <= 2 diam(P).
/// The ANN far-point distance is tau = 32 delta_big / eps and the ANN factor
/// is 1 + delta_small with delta_small = eps^2 / (32 - eps)^2.
struct HullConfig {
  double eps = 0.1;
  double delta_big = 1.0;
  std::size_t max_iters = 0;
  double tau = 0.0;
  double delta_small = 0.0;
};

/// ceil(8 / eps^2) + ceil(lg(1 / eps)).
std::size_t hull_iteration_budget(double eps);

/// Validates eps in (0, 1] and delta_big > 0, then fills the derived fields.
HullConfig make_hull_config(double eps, double delta_big);

/// Diameter bound derived from the probe-based estimate. The estimate lies
/// within a factor 3 of the diameter, so 3x the estimate is an upper bound.
double delta_big_from_estimate(const DiameterEstimate& estimate);

enum class Verdict { kIn, kOut };
enum class HullMode { kExactExtremal, kApproxExtremal, kAnn };
enum class ExtremalKind { kExact, kApprox, kAnnDerived };

std::string_view to_string(Verdict v);
std::string_view to_string(HullMode m);
std::string_view to_string(ExtremalKind k);

struct ExtremalAnswer {
  Point point;
  ExtremalKind kind = ExtremalKind::kExact;
};

/// Answers (possibly approximate) extremal queries: a point of P with
/// near-maximal dot product against a unit direction.
class ExtremalOracle {
 public:
  ExtremalOracle() = default;
  ExtremalOracle(const ExtremalOracle&) = delete;
  ExtremalOracle& operator=(const ExtremalOracle&) = delete;
  virtual ~ExtremalOracle() = default;

  virtual std::size_t dim() const noexcept = 0;
  ExtremalAnswer extremal(const Point& direction) const;
  std::uint64_t probes() const noexcept { return probes_.load(std::memory_order_relaxed); }

 protected:
  virtual ExtremalAnswer answer(const Point& direction) const = 0;

 private:
  mutable std::atomic<std::uint64_t> probes_{0};
};

/// Exact extremal queries over an explicit set; ties go to the
/// lexicographically smallest point.
class FiniteExtremalOracle : public ExtremalOracle {
 public:
  explicit FiniteExtremalOracle(std::vector<Point> points);
  std::size_t dim() const noexcept override { return points_.front().dim(); }
  const std::vector<Point>& points() const noexcept { return points_; }

 protected:
  ExtremalAnswer answer(const Point& direction) const override;

 private:
  std::vector<Point> points_;
};

/// Worst legal slack-approximate answer: among points whose dot product is
/// within slack * diam(P) of the maximum, the one with the smallest dot product.
class AdversarialExtremalOracle : public ExtremalOracle {
 public:
  AdversarialExtremalOracle(std::vector<Point> points, double slack);
  std::size_t dim() const noexcept override { return points_.front().dim(); }
  double slack() const noexcept { return slack_; }

 protected:
  ExtremalAnswer answer(const Point& direction) const override;

 private:
  std::vector<Point> points_;
  double slack_;
  double diameter_;
};

struct HullIterate {
  Point p;
  double d = 0.0;  ///< dist(p, q)
  std::vector<double> weights;  ///< convex weights over HullRun::support (prefix)
};

struct HullCertificate {
  /// In: a hull point within eps * delta_big / 2 of the query.
  std::optional<Point> witness;
  /// Out by early stop: unit direction v with max_P <v,x> <= support_value + slack < <v,q>.
  std::optional<Point> direction;
  double support_value = 0.0;
  double slack = 0.0;
  double query_value = 0.0;
};

struct HullRun {
  Verdict verdict = Verdict::kOut;
  HullMode mode = HullMode::kExactExtremal;
  std::vector<Point> support;  ///< probed points of P, in first-seen order
  std::vector<HullIterate> iterates;  ///< p_0, p_1, ...
  HullCertificate certificate;
  std::size_t iterations = 0;
  std::size_t probes = 0;
  std::size_t budget = 0;
  bool budget_exhausted = false;
  double eps = 0.0;
  double delta_big = 0.0;
  double delta_small = 0.0;
  double tau = 0.0;
};

/// Descent with exact extremal queries. Probe budget: cfg.max_iters.
HullRun membership_exact(const Point& q, const ExtremalOracle& extremal, const HullConfig& cfg);

/// Descent with (eps/4)-approximate extremal queries; stops with Out early
/// only when the extremal projection falls short of q by more than
/// eps * delta_big / 4. Probe budget: 4 * cfg.max_iters.
HullRun membership_approx_extremal(const Point& q, const ExtremalOracle& extremal, const HullConfig& cfg);

/// Extremal query in direction q - p_prev answered by one (1+delta_small)-ANN
/// probe placed tau away from p_prev along that direction.
ExtremalAnswer ann_extremal(const Point& p_prev, const Point& q, const NnOracle& ann, const HullConfig& cfg);

/// Descent driven only by ANN probes. Probe budget: 4 * cfg.max_iters.
HullRun membership_ann(const Point& q, const NnOracle& ann, const HullConfig& cfg);

}  // namespace pxprobe
