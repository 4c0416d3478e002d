#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "pxprobe/error.hpp"
#include "pxprobe/geometry.hpp"
#include "pxprobe/random.hpp"

using namespace pxprobe;
using Catch::Approx;

TEST_CASE("dist examples") {
  CHECK(dist(Point{0, 0}, Point{3, 4}) == Approx(5.0));
  CHECK(dist(Point{0.5, 0.5}, Point{0.5, 0.5}) == 0.0);
  CHECK(dist(Point{0, 0, 0}, Point{1, 1, 1}) == Approx(1.7320508).epsilon(1e-7));
  CHECK_THROWS_AS(dist(Point{0, 0}, Point{0, 0, 0}), UsageError);
}

TEST_CASE("dist_to_set examples") {
  const std::vector<Point> s1{{1, 0}, {0, 2}};
  auto r = dist_to_set(Point{0, 0}, s1);
  CHECK(r.distance == Approx(1.0));
  CHECK(r.index == 0);

  const std::vector<Point> s2{{1, 0}, {0, 0}};
  r = dist_to_set(Point{0.5, 0}, s2);
  CHECK(r.distance == Approx(0.5));
  CHECK(r.index == 1);  // (0,0) is lexicographically smaller

  const std::vector<Point> s3{{0, 0}};
  r = dist_to_set(Point{0, 0}, s3);
  CHECK(r.distance == 0.0);
  CHECK(r.index == 0);

  CHECK_THROWS_AS(dist_to_set(Point{0, 0}, std::vector<Point>{}), UsageError);
}

TEST_CASE("project_to_segment examples") {
  auto p = project_to_segment(Point{0.5, 1}, Point{0, 0}, Point{1, 0});
  CHECK(p.point == Point{0.5, 0});
  CHECK(p.t == Approx(0.5));

  p = project_to_segment(Point{2, 0}, Point{0, 0}, Point{1, 0});
  CHECK(p.point == Point{1, 0});
  CHECK(p.t == 1.0);

  p = project_to_segment(Point{0.5, 0.5}, Point{0, 0}, Point{1, 1});
  CHECK(dist(p.point, Point{0.5, 0.5}) < 1e-15);
  CHECK(p.t == Approx(0.5));

  p = project_to_segment(Point{3, 3}, Point{1, 1}, Point{1, 1});
  CHECK(p.point == Point{1, 1});
  CHECK(p.t == 0.0);
}

TEST_CASE("projection_along_ray examples") {
  CHECK(projection_along_ray(Point{1, 1}, Point{0, 0}, Point{1, 0}) == Approx(1.0));
  CHECK(projection_along_ray(Point{-1, 0.2}, Point{0, 0}, Point{1, 0}) == Approx(-1.0));
  CHECK(projection_along_ray(Point{0.3, 0.7}, Point{0.3, 0.7}, Point{0, 1}) == 0.0);
}

TEST_CASE("cell_inside_ball examples") {
  const Cell unit{Point{0, 0}, 1.0};
  CHECK(cell_inside_ball(unit, Ball{Point{0.5, 0.5}, 0.71}));
  CHECK_FALSE(cell_inside_ball(unit, Ball{Point{0.5, 0.5}, 0.70}));
  CHECK(cell_inside_ball(Cell{Point{0.2, 0.3}, 0.0}, Ball{Point{0.25, 0.3}, 0.1}));
}

TEST_CASE("cell queries") {
  const Cell c{Point{0.5, 0.25}, 0.25};
  CHECK(c.center() == Point{0.625, 0.375});
  CHECK(c.diameter() == Approx(0.25 * std::sqrt(2.0)));
  CHECK(c.max_distance(Point{0.5, 0.25}) == Approx(0.25 * std::sqrt(2.0)));
  CHECK(c.min_distance(Point{0.6, 0.3}) == 0.0);
  CHECK(c.min_distance(Point{0.0, 0.25}) == Approx(0.5));
  CHECK(c.contains(Point{0.75, 0.5}));
  CHECK_FALSE(c.contains(Point{0.76, 0.5}));
}

TEST_CASE("cone membership") {
  const Cone cone{Point{0, 0}, Point{1, 0}, 0.5};
  CHECK(cone.contains(Point{1, 0.5}));  // atan(0.5) < 0.5
  CHECK_FALSE(cone.contains(Point{1, 0.6}));
  CHECK_FALSE(cone.contains(Point{-1, 0}));
}

TEST_CASE("triangle inequality on random triples") {
  Rng rng(11);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t d = 1 + rng.index(6);
    const Point a = rng.uniform_point(d, -3, 3), b = rng.uniform_point(d, -3, 3), c = rng.uniform_point(d, -3, 3);
    REQUIRE(dist(a, c) <= dist(a, b) + dist(b, c) + 1e-9);
    REQUIRE(dist(a, b) == dist(b, a));
  }
}

TEST_CASE("segment projection is no farther than either endpoint") {
  Rng rng(12);
  for (int i = 0; i < 5000; ++i) {
    const std::size_t d = 1 + rng.index(5);
    const Point q = rng.uniform_point(d, -2, 2), a = rng.uniform_point(d, -2, 2), b = rng.uniform_point(d, -2, 2);
    const auto p = project_to_segment(q, a, b);
    REQUIRE(p.t >= 0.0);
    REQUIRE(p.t <= 1.0);
    REQUIRE(dist(q, p.point) <= dist(q, a) + 1e-12);
    REQUIRE(dist(q, p.point) <= dist(q, b) + 1e-12);
    REQUIRE(dist(p.point, (1.0 - p.t) * a + p.t * b) < 1e-12);
  }
}

TEST_CASE("cell inside ball implies sampled points inside") {
  Rng rng(13);
  int hits = 0;
  for (int i = 0; i < 200; ++i) {
    const Cell c{rng.uniform_point(2, 0, 0.5), rng.uniform(0.01, 0.5)};
    const Ball b{rng.uniform_point(2), rng.uniform(0.1, 1.0)};
    if (!cell_inside_ball(c, b)) continue;
    ++hits;
    for (int j = 0; j < 1000; ++j) {
      Point x = c.low;
      for (std::size_t k = 0; k < 2; ++k) x[k] += c.side * rng.uniform();
      REQUIRE(b.contains(x));
    }
  }
  CHECK(hits > 0);
}

TEST_CASE("point arithmetic and ordering") {
  const Point a{1, 2}, b{1, 3};
  CHECK(a < b);
  CHECK(a + b == Point{2, 5});
  CHECK(b - a == Point{0, 1});
  CHECK(2.0 * a == Point{2, 4});
  CHECK(dot(a, b) == 7.0);
  CHECK(norm(normalized(Point{3, 4})) == Approx(1.0));
  CHECK_THROWS_AS(normalized(Point{0, 0}), UsageError);
  CHECK_FALSE(Point{std::nan(""), 0}.is_finite());
  const std::vector<Point> pts{{0, 0}, {1, 0}, {0, 2}};
  CHECK(diameter(pts) == Approx(std::sqrt(5.0)));
}
