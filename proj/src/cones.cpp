#include "pxprobe/cones.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pxprobe/error.hpp"
#include "pxprobe/random.hpp"

namespace pxprobe {

namespace {

double angle_between(const Point& a, const Point& b) {
  const double c = dot(a, b) / (norm(a) * norm(b));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

std::size_t cells_per_edge_for(std::size_t dim, double angular_diameter) {
  const double side = (angular_diameter / (std::numbers::pi / 3.0)) / (3.0 * std::sqrt(static_cast<double>(dim)));
  return static_cast<std::size_t>(std::ceil(2.0 / side - 1e-9));
}

}  // namespace

std::size_t ConeCover::locate(const Point& direction) const {
  if (direction.dim() != dim) throw UsageError("ConeCover::locate: dimension mismatch");
  std::size_t axis = 0;
  for (std::size_t i = 1; i < dim; ++i) {
    if (std::abs(direction[i]) > std::abs(direction[axis])) axis = i;
  }
  const double lead = std::abs(direction[axis]);
  if (lead == 0.0) throw UsageError("ConeCover::locate: zero direction");
  const std::size_t face = 2 * axis + (direction[axis] > 0.0 ? 1 : 0);
  const std::size_t m = cells_per_edge;
  std::size_t index = 0;
  std::size_t stride = 1;
  for (std::size_t j = 0; j < dim; ++j) {
    if (j == axis) continue;
    const double u = (direction[j] / lead + 1.0) * 0.5 * static_cast<double>(m);
    const auto cell = static_cast<std::size_t>(std::clamp(std::floor(u), 0.0, static_cast<double>(m - 1)));
    index += cell * stride;
    stride *= m;
  }
  return face * stride + index;
}

double cone_cover_size(std::size_t dim, double angular_diameter) {
  if (dim < 2) throw UsageError("cone_cover_size: dimension must be >= 2");
  if (!(angular_diameter > 0.0)) throw UsageError("cone_cover_size: angular diameter must be positive");
  const auto m = static_cast<double>(cells_per_edge_for(dim, angular_diameter));
  return 2.0 * static_cast<double>(dim) * std::pow(m, static_cast<double>(dim - 1));
}

ConeCover build_cone_cover(std::size_t dim, double angular_diameter, std::size_t verify_samples) {
  if (dim < 2) throw UsageError("build_cone_cover: dimension must be >= 2");
  if (!(angular_diameter > 0.0 && angular_diameter < std::numbers::pi / 2.0 + 1e-12)) {
    throw UsageError("build_cone_cover: angular diameter must lie in (0, pi/2)");
  }
  ConeCover cover;
  cover.dim = dim;
  cover.angular_diameter = angular_diameter;
  cover.cells_per_edge = cells_per_edge_for(dim, angular_diameter);
  const std::size_t m = cover.cells_per_edge;
  const double side = 2.0 / static_cast<double>(m);

  const double per_face = std::pow(static_cast<double>(m), static_cast<double>(dim - 1));
  if (2.0 * static_cast<double>(dim) * per_face > 5e6) {
    throw UsageError("build_cone_cover: cover with " + std::to_string(2.0 * dim * per_face) +
                     " cones is too large to materialize");
  }
  const auto cells = static_cast<std::size_t>(per_face);
  const std::size_t corners = std::size_t{1} << (dim - 1);
  cover.cones.reserve(2 * dim * cells);

  const Point origin(dim, 0.0);
  std::vector<std::size_t> multi(dim - 1);
  std::vector<Point> corner_dirs(corners);
  for (std::size_t face = 0; face < 2 * dim; ++face) {
    const std::size_t axis = face / 2;
    const double sign = (face % 2 == 1) ? 1.0 : -1.0;
    for (std::size_t c = 0; c < cells; ++c) {
      std::size_t rest = c;
      for (std::size_t j = 0; j + 1 < dim; ++j) {
        multi[j] = rest % m;
        rest /= m;
      }
      Point center(dim);
      center[axis] = sign;
      for (std::size_t k = 0; k < corners; ++k) {
        Point corner(dim);
        corner[axis] = sign;
        for (std::size_t j = 0, slot = 0; j < dim; ++j) {
          if (j == axis) continue;
          const double lo = -1.0 + side * static_cast<double>(multi[slot]);
          corner[j] = ((k >> slot) & 1U) ? lo + side : lo;
          center[j] = lo + 0.5 * side;
          ++slot;
        }
        corner_dirs[k] = std::move(corner);
      }
      Cone cone{origin, normalized(center), 0.0};
      for (std::size_t a = 0; a < corners; ++a) {
        cone.half_angle = std::max(cone.half_angle, angle_between(cone.axis, corner_dirs[a]));
        for (std::size_t b = a + 1; b < corners; ++b) {
          cover.measured_diameter = std::max(cover.measured_diameter, angle_between(corner_dirs[a], corner_dirs[b]));
        }
      }
      cover.cones.push_back(std::move(cone));
    }
  }

  if (cover.measured_diameter > angular_diameter) {
    throw std::logic_error("build_cone_cover: cell cone wider than requested");
  }
  Rng rng(0x9e3779b97f4a7c15ULL ^ dim);
  for (std::size_t s = 0; s < verify_samples; ++s) {
    const Point u = rng.unit_vector(dim);
    if (!cover.cones[cover.locate(u)].contains(u)) {
      throw std::logic_error("build_cone_cover: sampled direction not covered");
    }
  }
  return cover;
}

}  // namespace pxprobe
