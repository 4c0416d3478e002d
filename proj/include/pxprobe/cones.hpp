#pragma once

#include <cstddef>
#include <vector>

#include "pxprobe/geometry.hpp"

namespace pxprobe {

/// Finite family of cones with apex at the origin whose union is R^d.
///
/// Built from a uniform grid on the outer faces of [-1, 1]^d: every grid cell
/// spans one cone. Each stored Cone is the circular cone circumscribing the
/// cell (axis through the cell center), so membership tests are conservative.
struct ConeCover {
  std::size_t dim = 0;
  double angular_diameter = 0.0;  ///< requested bound
  double measured_diameter = 0.0;  ///< max angle between corner directions of any cell
  std::size_t cells_per_edge = 0;  ///< grid resolution on each face
  std::vector<Cone> cones;

  std::size_t size() const noexcept { return cones.size(); }

  /// Index of the face-grid cone whose cell the ray through `direction` hits.
  std::size_t locate(const Point& direction) const;
};

/// Builds the face-grid cover. The grid side is 1/(3 sqrt(d)) for an angular
/// diameter of pi/3 and shrinks proportionally for smaller angles.
///
/// Coverage is verified on `verify_samples` random directions; a miss throws
/// std::logic_error.
ConeCover build_cone_cover(std::size_t dim, double angular_diameter, std::size_t verify_samples = 10000);

/// Number of cones `build_cone_cover` would produce, without building them.
/// Returned as a double because it overflows quickly with the dimension.
double cone_cover_size(std::size_t dim, double angular_diameter);

}  // namespace pxprobe
