#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include "pxprobe/error.hpp"
#include "pxprobe/random.hpp"
#include "pxprobe/reference.hpp"

using namespace pxprobe;
using namespace pxprobe::reference;
using Catch::Approx;

namespace {

const std::vector<Point> kSquare{{0, 0}, {1, 0}, {0, 1}, {1, 1}};

std::vector<Point> random_points(Rng& rng, std::size_t n, std::size_t d) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(rng.uniform_point(d));
  return pts;
}

}  // namespace

TEST_CASE("gonzalez examples") {
  const std::vector<Point> pts{{0, 0}, {1, 0}, {0.4, 0}};
  const auto g = gonzalez(pts, 2);
  REQUIRE(g.centers.size() == 2);
  CHECK(g.centers[0] == Point{0, 0});
  CHECK(g.centers[1] == Point{1, 0});
  CHECK(g.radii[1] == Approx(0.4));

  const auto all = gonzalez(pts, 3);
  CHECK(all.radii.back() == 0.0);
  CHECK_THROWS_AS(gonzalez(pts, 0), UsageError);
  CHECK_THROWS_AS(gonzalez(pts, 4), UsageError);
}

TEST_CASE("gonzalez radii cover and decrease") {
  Rng rng(31);
  const auto pts = random_points(rng, 100, 2);
  const auto g = gonzalez(pts, 100);
  for (std::size_t k = 1; k <= 100; ++k) {
    if (k > 1) REQUIRE(g.radii[k - 1] <= g.radii[k - 2]);
    // every point within r_k of the first k centers
    for (const Point& p : pts) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < k; ++c) best = std::min(best, dist(p, g.centers[c]));
      REQUIRE(best <= g.radii[k - 1] + 1e-12);
    }
    // the next center realises the radius (packing property)
    if (k < 100) {
      double sep = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < k; ++c) sep = std::min(sep, dist(g.centers[k], g.centers[c]));
      REQUIRE(sep == Approx(g.radii[k - 1]).margin(1e-12));
    }
  }
  CHECK(covering_radius(pts, std::span<const Point>(g.centers.data(), 5)) == Approx(g.radii[4]));
}

TEST_CASE("exact_extremal examples") {
  CHECK(exact_extremal(kSquare, Point{1, 0}) == Point{1, 0});
  CHECK(exact_extremal(kSquare, normalized(Point{1, 1})) == Point{1, 1});
  CHECK_THROWS_AS(exact_extremal(std::vector<Point>{}, Point{1, 0}), UsageError);

  Rng rng(32);
  const auto pts = random_points(rng, 80, 4);
  for (int i = 0; i < 1000; ++i) {
    const Point v = rng.unit_vector(4);
    const Point z = exact_extremal(pts, v);
    for (const Point& p : pts) REQUIRE(dot(v, p) <= dot(v, z) + 1e-12);
  }
}

TEST_CASE("exact_hull_distance examples") {
  CHECK(exact_hull_distance(Point{0.5, 0.5}, kSquare) == 0.0);
  CHECK(exact_hull_distance(Point{2, 0.5}, kSquare) == Approx(1.0));
  CHECK(exact_hull_distance(Point{1.5, 1.5}, kSquare) == Approx(std::sqrt(0.5)));
  CHECK(exact_hull_distance(Point{3, 0}, std::vector<Point>{{0, 0}}) == Approx(3.0));
  CHECK(exact_hull_distance(Point{0.5, 1}, std::vector<Point>{{0, 0}, {1, 0}}) == Approx(1.0));
}

TEST_CASE("planar hull distance agrees with the iterative method") {
  Rng rng(33);
  for (int t = 0; t < 300; ++t) {
    const auto pts = random_points(rng, 3 + rng.index(40), 2);
    const Point q = rng.uniform_point(2, -0.5, 1.5);
    const double exact = exact_hull_distance(q, pts);
    const HullDistance it = hull_distance_iterative(q, pts);
    REQUIRE(it.distance == Approx(exact).margin(1e-6));
  }
}

TEST_CASE("iterative hull distance certificate") {
  Rng rng(34);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 3 + rng.index(6);
    const auto pts = random_points(rng, 5 + rng.index(60), d);
    const Point q = rng.uniform_point(d, -0.5, 1.5);
    const HullDistance h = hull_distance_iterative(q, pts);
    REQUIRE(h.converged);
    // convex weights reconstruct the nearest point
    Point rec(d, 0.0);
    double sum = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      REQUIRE(h.weights[i] >= -1e-12);
      sum += h.weights[i];
      rec += h.weights[i] * pts[i];
    }
    REQUIRE(sum == Approx(1.0).margin(1e-9));
    REQUIRE(dist(rec, h.nearest) < 1e-9);
    REQUIRE(h.distance == Approx(dist(q, h.nearest)).margin(1e-12));
    REQUIRE(h.distance - h.lower_bound <= 1e-7);
    // projection optimality: no point of P lies beyond the supporting plane
    const Point g = q - h.nearest;
    for (const Point& p : pts) REQUIRE(dot(p - h.nearest, g) <= 1e-7 * (1 + h.distance));
  }
}

TEST_CASE("convex_hull_2d") {
  const std::vector<Point> pts{{0, 0}, {1, 0}, {0.5, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
  const auto hull = convex_hull_2d(pts);
  REQUIRE(hull.size() == 4);
  CHECK(hull[0] == Point{0, 0});
  CHECK(hull[1] == Point{1, 0});
  CHECK(hull[2] == Point{1, 1});
  CHECK(hull[3] == Point{0, 1});
}

TEST_CASE("brute_force_nn tie break") {
  const std::vector<Point> pts{{1, 0}, {0, 0}};
  CHECK(brute_force_nn(pts, Point{0.5, 0}) == Point{0, 0});
}
