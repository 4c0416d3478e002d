#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pxprobe/geometry.hpp"
#include "pxprobe/oracles.hpp"

namespace pxprobe {

struct CarveConfig {
  /// Cells straddling a carved sphere are split until their diameter is at
  /// most rho times the ball radius.
  double rho = 0.25;
  int max_depth = 20;
  /// Depth of the uniform grid the domain starts from.
  int initial_depth = 0;
  /// Hard cap on the number of live cells; splitting stops once reached.
  std::size_t max_cells = std::size_t{1} << 22;
};

/// Adaptive decomposition of [0,1]^d into live hypercube cells covering the
/// still-uncovered region D_i (domain minus the carved open balls).
///
/// A cell dies only when it lies strictly inside a carved ball, so every
/// uncovered point stays inside some live cell. The domain also keeps the
/// explored centers ("sites") and caches, per live cell, the distance from
/// the cell center to the nearest site.
class CarvedDomain {
 public:
  explicit CarvedDomain(std::size_t dim, CarveConfig config = {});

  std::size_t dim() const noexcept { return dim_; }
  const CarveConfig& config() const noexcept { return config_; }
  std::size_t live_count() const noexcept { return live_.size(); }
  bool empty() const noexcept { return live_.empty(); }
  /// True once a split was refused because of `max_cells` or `max_depth`.
  bool resolution_capped() const noexcept { return capped_; }

  std::vector<Cell> live_cells() const;
  const std::vector<Point>& sites() const noexcept { return sites_; }

  void carve(const Ball& ball);

  /// Adds a site unless an equal one is already present.
  void add_site(const Point& site);

  /// Splits live cells until no cell can hold a point farther than
  /// (1 + rho/2) times the best live-cell center value, unless the cell is
  /// already fine relative to its own distance (diameter <= rho * gap).
  void refine_for_selection();

  /// Drops the live cell centered at `center` if it sits at max_depth. Used
  /// after probing that center: the cell cannot be refined any further, so
  /// whatever it still hides is within one cell diameter of a known site.
  /// Returns whether a cell was removed.
  bool retire_probed(const Point& center);

  struct Candidate {
    Point q;
    double r = 0.0;
  };
  /// Live-cell center farthest from the sites (ties to the lexicographically
  /// smallest center), using the cached distances.
  std::optional<Candidate> farthest_center() const;

 private:
  struct Node {
    Point center;
    int depth = 0;
    double gap = 0.0;
  };

  double side_at(int depth) const;
  Cell cell_of(const Node& node) const;
  double gap_of(const Point& center) const;
  /// Appends the 2^d children of `node` to `out`.
  void split(const Node& node, std::vector<Node>& out) const;
  bool may_split(const Node& node, std::size_t live_total);

  std::size_t dim_;
  CarveConfig config_;
  std::vector<Node> live_;
  std::vector<Point> sites_;
  bool capped_ = false;
};

/// Pure scan over the live cells: center maximizing dist_to_set(., sites),
/// ties to the lexicographically smallest center. nullopt when no live cell
/// remains.
std::optional<CarvedDomain::Candidate> farthest_live_point(const CarvedDomain& domain,
                                                           std::span<const Point> sites);

enum class ExploreMode { kExact, kAnn };

struct ExploreOptions {
  ExploreMode mode = ExploreMode::kExact;
  double eps = 0.0;  ///< ANN factor; used only in kAnn mode, must lie in (0, 1)
  CarveConfig carve{};
};

struct GreedyStep {
  Point q;
  Point nnp;
  double r = 0.0;             ///< dist_to_set(q, previous centers); dist(q, nnp) for the first step
  double reported = 0.0;      ///< distance reported by the oracle
  double carve_radius = 0.0;  ///< radius of the open ball removed from the domain
};

struct GreedyTrace {
  ExploreMode mode = ExploreMode::kExact;
  double eps = 0.0;
  std::vector<GreedyStep> steps;
  OracleStats probes;  ///< probes issued by this exploration only
  std::size_t live_cells_remaining = 0;
  bool complete = false;  ///< no live cell was left to probe
  bool resolution_capped = false;

  /// Distinct returned neighbours, in discovery order.
  std::vector<Point> centers() const;
  std::vector<Point> centers(std::size_t first_steps) const;
};

/// Incremental greedy exploration of the set behind an NN/ANN oracle.
/// Single owner; the oracle must outlive the explorer.
class Explorer {
 public:
  Explorer(const NnOracle& oracle, ExploreOptions options = {});

  /// Issues one probe. Returns false (and issues nothing) once the domain has
  /// no live cells left.
  bool step();

  const GreedyTrace& trace() const noexcept { return trace_; }
  const CarvedDomain& domain() const noexcept { return domain_; }
  std::vector<Ball> carved_balls() const;

 private:
  const NnOracle& oracle_;
  ExploreOptions options_;
  CarvedDomain domain_;
  GreedyTrace trace_;
};

/// Runs `iterations` probes (fewer only if the domain empties).
GreedyTrace explore(const NnOracle& oracle, std::size_t iterations, const ExploreOptions& options = {});

/// Number of cones of angular diameter at most pi/12 covering the directions
/// in R^d: 2 for d = 1, 24 for d = 2, the face-grid construction otherwise.
std::size_t cone_count(std::size_t dim);

struct DiameterEstimate {
  double estimate = 0.0;          ///< max(centers_diameter, last_radius)
  double centers_diameter = 0.0;
  double last_radius = 0.0;
  std::size_t iterations = 0;
  std::size_t distinct_centers = 0;
  /// Exploration found a single point; the estimate is then just the
  /// carving slack `last_radius`.
  bool single_center = false;
};

/// Constant-factor diameter estimate from cone_count(d) + 1 exact probes.
DiameterEstimate estimate_diameter(const NnOracle& oracle, const CarveConfig& carve = {});

struct SpreadEstimate {
  double diam_domain = 0.0;
  double min_pairwise = 0.0;
  double phi = 0.0;
};

/// Spread of a finite set inside the unit-cube domain [0,1]^d.
SpreadEstimate spread(std::span<const Point> points);

}  // namespace pxprobe
