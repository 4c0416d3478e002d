#include "pxprobe/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pxprobe/cones.hpp"
#include "pxprobe/error.hpp"

namespace pxprobe {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Distances from x to the nearest / farthest point of the cube centered at
// `center` with half side `half`.
double cube_min_distance(const Point& center, double half, const Point& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double t = std::max(0.0, std::abs(x[i] - center[i]) - half);
    s += t * t;
  }
  return std::sqrt(s);
}

double cube_max_distance(const Point& center, double half, const Point& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double t = std::abs(x[i] - center[i]) + half;
    s += t * t;
  }
  return std::sqrt(s);
}

bool better_candidate(double gap, const Point& center, double best_gap, const Point& best_center) {
  if (gap > best_gap + kTolerance) return true;
  return gap >= best_gap - kTolerance && center < best_center;
}

}  // namespace

// ---------------------------------------------------------------------------
// CarvedDomain

CarvedDomain::CarvedDomain(std::size_t dim, CarveConfig config) : dim_(dim), config_(config) {
  if (dim_ == 0) throw UsageError("CarvedDomain: dimension must be >= 1");
  if (!(config_.rho > 0.0)) throw UsageError("CarvedDomain: rho must be positive");
  if (config_.initial_depth < 0 || config_.max_depth < config_.initial_depth || config_.max_depth > 50) {
    throw UsageError("CarvedDomain: need 0 <= initial_depth <= max_depth <= 50");
  }
  const double cells = std::pow(2.0, static_cast<double>(dim_) * config_.initial_depth);
  if (cells > static_cast<double>(config_.max_cells)) {
    throw UsageError("CarvedDomain: initial grid exceeds the cell cap");
  }

  const auto per_axis = std::size_t{1} << config_.initial_depth;
  const double side = side_at(config_.initial_depth);
  const auto count = static_cast<std::size_t>(cells);
  live_.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    Node node{Point(dim_), config_.initial_depth, kInf};
    std::size_t rest = c;
    // Last coordinate varies fastest, so cells come out in lexicographic order.
    for (std::size_t i = dim_; i-- > 0;) {
      node.center[i] = (static_cast<double>(rest % per_axis) + 0.5) * side;
      rest /= per_axis;
    }
    live_.push_back(std::move(node));
  }
}

double CarvedDomain::side_at(int depth) const { return std::ldexp(1.0, -depth); }

Cell CarvedDomain::cell_of(const Node& node) const {
  const double side = side_at(node.depth);
  Point low = node.center;
  for (std::size_t i = 0; i < dim_; ++i) low[i] -= 0.5 * side;
  return {std::move(low), side};
}

std::vector<Cell> CarvedDomain::live_cells() const {
  std::vector<Cell> out;
  out.reserve(live_.size());
  for (const Node& n : live_) out.push_back(cell_of(n));
  return out;
}

double CarvedDomain::gap_of(const Point& center) const {
  double g = kInf;
  for (const Point& s : sites_) g = std::min(g, dist(center, s));
  return g;
}

void CarvedDomain::split(const Node& node, std::vector<Node>& out) const {
  const double quarter = 0.25 * side_at(node.depth);
  const std::size_t children = std::size_t{1} << dim_;
  for (std::size_t c = 0; c < children; ++c) {
    Node child{node.center, node.depth + 1, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) child.center[i] += ((c >> i) & 1U) ? quarter : -quarter;
    child.gap = gap_of(child.center);
    out.push_back(std::move(child));
  }
}

bool CarvedDomain::may_split(const Node& node, std::size_t live_total) {
  const std::size_t growth = (std::size_t{1} << dim_) - 1;
  if (node.depth >= config_.max_depth || live_total + growth > config_.max_cells) {
    capped_ = true;
    return false;
  }
  return true;
}

void CarvedDomain::carve(const Ball& ball) {
  if (ball.center.dim() != dim_) throw UsageError("carve: ball dimension does not match the domain");
  if (!(ball.radius > 0.0)) return;

  const std::size_t growth = (std::size_t{1} << dim_) - 1;
  std::size_t total = live_.size();
  std::vector<Node> kept;
  kept.reserve(live_.size());
  std::vector<Node> pending;
  for (Node& root : live_) {
    const double half = 0.5 * side_at(root.depth);
    if (cube_min_distance(root.center, half, ball.center) >= ball.radius) {
      kept.push_back(std::move(root));
      continue;
    }
    pending.push_back(std::move(root));
    while (!pending.empty()) {
      Node node = std::move(pending.back());
      pending.pop_back();
      const double h = 0.5 * side_at(node.depth);
      if (cube_min_distance(node.center, h, ball.center) >= ball.radius) {
        kept.push_back(std::move(node));
        continue;
      }
      // Strictly inside the open ball: no uncovered point can remain.
      if (cube_max_distance(node.center, h, ball.center) < ball.radius - kTolerance) {
        --total;
        continue;
      }
      const double diam = 2.0 * h * std::sqrt(static_cast<double>(dim_));
      if (diam <= config_.rho * ball.radius || !may_split(node, total)) {
        kept.push_back(std::move(node));
        continue;
      }
      split(node, pending);
      total += growth;
    }
  }
  live_ = std::move(kept);
}

void CarvedDomain::add_site(const Point& site) {
  if (site.dim() != dim_) throw UsageError("add_site: dimension does not match the domain");
  if (std::find(sites_.begin(), sites_.end(), site) != sites_.end()) return;
  sites_.push_back(site);
  for (Node& n : live_) n.gap = std::min(n.gap, dist(n.center, site));
}

void CarvedDomain::refine_for_selection() {
  if (sites_.empty()) return;
  const double sqrt_d = std::sqrt(static_cast<double>(dim_));
  const std::size_t growth = (std::size_t{1} << dim_) - 1;
  std::vector<std::size_t> to_split;
  while (true) {
    double best = 0.0;
    for (const Node& n : live_) best = std::max(best, n.gap);
    const double bound = (1.0 + 0.5 * config_.rho) * best;

    to_split.clear();
    std::size_t total = live_.size();
    for (std::size_t i = 0; i < live_.size(); ++i) {
      const Node& n = live_[i];
      const double diam = side_at(n.depth) * sqrt_d;
      if (n.gap + 0.5 * diam > bound && diam > config_.rho * n.gap && may_split(n, total)) {
        to_split.push_back(i);
        total += growth;
      }
    }
    if (to_split.empty()) return;

    std::vector<Node> next;
    next.reserve(total);
    std::size_t cursor = 0;
    for (std::size_t i = 0; i < live_.size(); ++i) {
      if (cursor < to_split.size() && to_split[cursor] == i) {
        split(live_[i], next);
        ++cursor;
      } else {
        next.push_back(std::move(live_[i]));
      }
    }
    live_ = std::move(next);
  }
}

bool CarvedDomain::retire_probed(const Point& center) {
  const auto it = std::find_if(live_.begin(), live_.end(), [&](const Node& n) { return n.center == center; });
  if (it == live_.end() || it->depth < config_.max_depth) return false;
  live_.erase(it);
  capped_ = true;
  return true;
}

std::optional<CarvedDomain::Candidate> CarvedDomain::farthest_center() const {
  if (live_.empty()) return std::nullopt;
  const Node* best = &live_.front();
  for (const Node& n : live_) {
    if (better_candidate(n.gap, n.center, best->gap, best->center)) best = &n;
  }
  return Candidate{best->center, best->gap};
}

std::optional<CarvedDomain::Candidate> farthest_live_point(const CarvedDomain& domain,
                                                           std::span<const Point> sites) {
  if (sites.empty()) throw UsageError("farthest_live_point: empty center set");
  std::optional<CarvedDomain::Candidate> best;
  for (const Cell& cell : domain.live_cells()) {
    Point c = cell.center();
    const double r = dist_to_set(c, sites).distance;
    if (!best || better_candidate(r, c, best->r, best->q)) best = CarvedDomain::Candidate{std::move(c), r};
  }
  return best;
}

// ---------------------------------------------------------------------------
// Exploration

std::vector<Point> GreedyTrace::centers() const { return centers(steps.size()); }

std::vector<Point> GreedyTrace::centers(std::size_t first_steps) const {
  std::vector<Point> out;
  const std::size_t n = std::min(first_steps, steps.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(out.begin(), out.end(), steps[i].nnp) == out.end()) out.push_back(steps[i].nnp);
  }
  return out;
}

Explorer::Explorer(const NnOracle& oracle, ExploreOptions options)
    : oracle_(oracle), options_(options), domain_(oracle.dim(), options.carve) {
  if (options_.mode == ExploreMode::kAnn && !(options_.eps > 0.0 && options_.eps < 1.0)) {
    throw UsageError("explore: ANN mode needs 0 < eps < 1");
  }
  const auto [lo, hi] = oracle_.bounds();
  for (std::size_t i = 0; i < lo.dim(); ++i) {
    if (lo[i] < -1e-9 || hi[i] > 1.0 + 1e-9) {
      throw UsageError("explore: the point set must lie in the unit cube [0,1]^d");
    }
  }
  trace_.mode = options_.mode;
  trace_.eps = options_.mode == ExploreMode::kAnn ? options_.eps : 0.0;
  trace_.live_cells_remaining = domain_.live_count();
}

bool Explorer::step() {
  Point q;
  double r = 0.0;
  const bool first = trace_.steps.empty();
  if (first) {
    q = Point(domain_.dim(), 0.5);
  } else {
    domain_.refine_for_selection();
    auto cand = domain_.farthest_center();
    if (!cand) {
      trace_.complete = true;
      return false;
    }
    q = std::move(cand->q);
    r = cand->r;
  }

  NnAnswer answer;
  double carve_radius = 0.0;
  if (options_.mode == ExploreMode::kExact) {
    answer = oracle_.nn_query(q);
    ++trace_.probes.exact_queries;
    carve_radius = answer.distance;
  } else {
    answer = oracle_.ann_query(q, options_.eps);
    ++trace_.probes.ann_queries;
    carve_radius = (1.0 - options_.eps) * answer.distance;
  }
  if (first) r = dist(q, answer.point);

  domain_.carve(Ball{q, carve_radius});
  domain_.add_site(answer.point);
  domain_.retire_probed(q);

  trace_.steps.push_back(GreedyStep{std::move(q), std::move(answer.point), r, answer.distance, carve_radius});
  trace_.live_cells_remaining = domain_.live_count();
  trace_.resolution_capped = domain_.resolution_capped();
  if (domain_.empty()) trace_.complete = true;
  return true;
}

std::vector<Ball> Explorer::carved_balls() const {
  std::vector<Ball> out;
  out.reserve(trace_.steps.size());
  for (const GreedyStep& s : trace_.steps) out.push_back(Ball{s.q, s.carve_radius});
  return out;
}

GreedyTrace explore(const NnOracle& oracle, std::size_t iterations, const ExploreOptions& options) {
  if (iterations < 1) throw UsageError("explore: iterations must be >= 1");
  Explorer explorer(oracle, options);
  for (std::size_t i = 0; i < iterations; ++i) {
    if (!explorer.step()) break;
  }
  return explorer.trace();
}

std::size_t cone_count(std::size_t dim) {
  if (dim == 0) throw UsageError("cone_count: dimension must be >= 1");
  if (dim == 1) return 2;
  if (dim == 2) return 24;
  const double n = cone_cover_size(dim, std::numbers::pi / 12.0);
  if (n > 1e9) throw UsageError("cone_count: cover too large for dimension " + std::to_string(dim));
  return static_cast<std::size_t>(n);
}

DiameterEstimate estimate_diameter(const NnOracle& oracle, const CarveConfig& carve) {
  DiameterEstimate out;
  out.iterations = cone_count(oracle.dim()) + 1;
  ExploreOptions options;
  options.carve = carve;
  const GreedyTrace trace = explore(oracle, out.iterations, options);
  const std::vector<Point> centers = trace.centers();
  out.iterations = trace.steps.size();
  out.distinct_centers = centers.size();
  out.single_center = centers.size() == 1;
  out.centers_diameter = diameter(centers);
  out.last_radius = trace.steps.back().r;
  out.estimate = std::max(out.centers_diameter, out.last_radius);
  return out;
}

SpreadEstimate spread(std::span<const Point> points) {
  if (points.size() < 2) throw UsageError("spread: need at least two points");
  const std::size_t d = points.front().dim();
  double closest = kInf;
  for (std::size_t i = 0; i < points.size(); ++i) {
    require_same_dim(points[i], points.front());
    for (std::size_t j = i + 1; j < points.size(); ++j) closest = std::min(closest, dist(points[i], points[j]));
  }
  if (!(closest > 0.0)) throw UsageError("spread: duplicate points make the spread undefined");
  const double diam = std::sqrt(static_cast<double>(d));
  return {diam, closest, diam / closest};
}

}  // namespace pxprobe
