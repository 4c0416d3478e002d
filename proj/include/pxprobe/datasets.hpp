#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "pxprobe/geometry.hpp"

namespace pxprobe {

/// Synthetic point sets, deterministic under `seed`.
///   uniform         n points uniform in [0,1]^d
///   circle          n points on the sphere of radius 0.4 around (0.5, ..., 0.5)
///   clusters        Gaussian blobs (sigma 0.05) around min(n, 5) random centers, clamped to [0,1]^d
///   counterexample  counterexample_set(n); d is ignored
std::vector<Point> generate_points(std::string_view shape, std::size_t n, std::size_t d, std::uint64_t seed);

}  // namespace pxprobe
