#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include "pxprobe/error.hpp"
#include "pxprobe/oracles.hpp"
#include "pxprobe/random.hpp"

using namespace pxprobe;
using Catch::Approx;

namespace {

// Plain loops, independent of dist_to_set.
Point brute_nn(const std::vector<Point>& pts, const Point& q) {
  std::size_t best = 0;
  double bd = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double s = 0;
    for (std::size_t j = 0; j < q.dim(); ++j) s += (pts[i][j] - q[j]) * (pts[i][j] - q[j]);
    const double d = std::sqrt(s);
    if (d < bd - 1e-12 || (std::abs(d - bd) <= 1e-12 && pts[i] < pts[best])) {
      best = i;
      bd = std::min(bd, d);
    }
  }
  return pts[best];
}

std::vector<Point> random_points(Rng& rng, std::size_t n, std::size_t d) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(rng.uniform_point(d));
  return pts;
}

}  // namespace

TEST_CASE("nn_query examples") {
  FiniteSetOracle finite({{0, 0}, {1, 0}});
  auto a = finite.nn_query(Point{0.9, 0});
  CHECK(a.point == Point{1, 0});
  CHECK(a.distance == Approx(0.1));

  SphereOracle sphere(Point{0.5, 0.5}, 0.25);
  a = sphere.nn_query(Point{0.5, 0.9});
  CHECK(dist(a.point, Point{0.5, 0.75}) < 1e-15);
  CHECK(a.distance == Approx(0.15));

  BallUnionOracle balls({Ball{Point{0.5, 0.5}, 0.2}});
  a = balls.nn_query(Point{0.5, 0.6});
  CHECK(a.point == Point{0.5, 0.6});
  CHECK(a.distance == 0.0);

  CHECK_THROWS_AS(finite.nn_query(Point{0, 0, 0}), UsageError);
}

TEST_CASE("sphere center query returns the lexicographically smallest surface point") {
  SphereOracle sphere(Point{0.5, 0.5}, 0.25);
  const auto a = sphere.nn_query(Point{0.5, 0.5});
  CHECK(a.point == Point{0.25, 0.5});
  CHECK(a.distance == Approx(0.25));
}

TEST_CASE("box boundary oracle") {
  BoxBoundaryOracle box(Point{0, 0}, Point{1, 2});
  auto a = box.nn_query(Point{0.5, 0.4});
  CHECK(a.point == Point{0.5, 0});
  CHECK(a.distance == Approx(0.4));
  a = box.nn_query(Point{2, 3});
  CHECK(a.point == Point{1, 2});
  CHECK(box.contains(a.point));
  CHECK_FALSE(box.contains(Point{0.5, 0.5}));
}

TEST_CASE("ann_query examples") {
  FiniteSetOracle finite({{0, 0}, {1, 0}});
  const auto a = finite.ann_query(Point{1, 0}, 0.1);
  CHECK(a.point == Point{1, 0});
  CHECK(a.distance == 0.0);

  const auto b = finite.ann_query(Point{0.4, 0}, 0.5);
  CHECK(b.distance <= 1.5 * 0.4 + 1e-12);

  AdversarialAnnOracle adv({{0, 0}, {1, 0}});
  const auto c = adv.ann_query(Point{0.4, 0}, 0.5);
  CHECK(c.point == Point{1, 0});  // 0.6 <= 1.5 * 0.4
  CHECK_THROWS_AS(finite.ann_query(Point{0, 0}, -0.1), UsageError);
}

TEST_CASE("delegating ANN equals exact NN") {
  Rng rng(21);
  FiniteSetOracle oracle(random_points(rng, 50, 3));
  for (int i = 0; i < 1000; ++i) {
    const Point q = rng.uniform_point(3, -0.5, 1.5);
    REQUIRE(oracle.ann_query(q, 0.3).point == oracle.nn_query(q).point);
  }
}

TEST_CASE("adversarial_ann_query examples") {
  FiniteSetOracle base({{0, 0}, {1, 0}});
  CHECK(adversarial_ann_query(base, Point{0.47, 0}, 0.2).point == Point{1, 0});
  CHECK(adversarial_ann_query(base, Point{0.1, 0}, 0.2).point == Point{0, 0});

  Rng rng(22);
  FiniteSetOracle oracle(random_points(rng, 40, 2));
  for (int i = 0; i < 1000; ++i) {
    const Point q = rng.uniform_point(2);
    REQUIRE(adversarial_ann_query(oracle, q, 0.0).point == oracle.nn_query(q).point);
  }
}

TEST_CASE("nn_query agrees with brute force") {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 1 + rng.index(5);
    const auto pts = random_points(rng, 1 + rng.index(80), d);
    FiniteSetOracle oracle(pts);
    for (int i = 0; i < 100; ++i) {
      const Point q = rng.uniform_point(d, -1, 2);
      REQUIRE(oracle.nn_query(q).point == brute_nn(pts, q));
    }
  }
}

TEST_CASE("adversarial answers are legal") {
  Rng rng(24);
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 2 + rng.index(3);
    const auto pts = random_points(rng, 60, d);
    AdversarialAnnOracle oracle(pts);
    for (int i = 0; i < 100; ++i) {
      const Point q = rng.uniform_point(d, -0.5, 1.5);
      const double eps = rng.uniform(0.0, 1.0);
      const auto a = oracle.ann_query(q, eps);
      const double exact = dist(q, brute_nn(pts, q));
      REQUIRE(dist(q, a.point) <= (1 + eps) * exact + 1e-12);
      REQUIRE(oracle.contains(a.point, 0.0));
      REQUIRE(a.distance == Approx(dist(q, a.point)).margin(1e-12));
    }
  }
}

TEST_CASE("analytic answers lie on the represented set") {
  Rng rng(25);
  SphereOracle sphere(Point{0.5, 0.5, 0.5}, 0.3);
  BallUnionOracle balls({Ball{Point{0.2, 0.2, 0.2}, 0.1}, Ball{Point{0.7, 0.6, 0.5}, 0.25}});
  BoxBoundaryOracle box(Point{0.1, 0.2, 0.3}, Point{0.9, 0.8, 0.7});
  for (int i = 0; i < 1000; ++i) {
    const Point q = rng.uniform_point(3, -0.5, 1.5);
    const auto s = sphere.nn_query(q);
    REQUIRE(std::abs(dist(s.point, sphere.center()) - 0.3) <= 1e-9);
    REQUIRE(s.distance == Approx(std::abs(dist(q, sphere.center()) - 0.3)).margin(1e-12));
    const auto b = balls.nn_query(q);
    REQUIRE(balls.contains(b.point));
    double expect = std::numeric_limits<double>::infinity();
    for (const Ball& ball : balls.balls()) expect = std::min(expect, std::max(0.0, dist(q, ball.center) - ball.radius));
    REQUIRE(b.distance == Approx(expect).margin(1e-12));
    const auto x = box.nn_query(q);
    REQUIRE(box.contains(x.point));
  }
}

TEST_CASE("query accounting") {
  FiniteSetOracle oracle({{0, 0}, {1, 1}});
  for (int i = 0; i < 7; ++i) oracle.nn_query(Point{0.2, 0.2});
  for (int i = 0; i < 5; ++i) oracle.ann_query(Point{0.2, 0.2}, 0.1);
  CHECK(oracle.stats().exact_queries == 7);
  CHECK(oracle.stats().ann_queries == 5);
  CHECK(oracle.stats().total() == 12);
  oracle.reset_stats();
  CHECK(oracle.stats().total() == 0);
}
