#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "pxprobe/density.hpp"
#include "pxprobe/explorer.hpp"
#include "pxprobe/geometry.hpp"
#include "pxprobe/hull.hpp"

namespace pxprobe::report {

nlohmann::json to_json(const Point& p);
nlohmann::json to_json(const GreedyTrace& trace);
nlohmann::json to_json(const HullRun& run);
nlohmann::json to_json(const DensityClustering& clustering);
nlohmann::json to_json(const DiameterEstimate& estimate);

std::string_view to_string(ExploreMode mode);

// 2-D plots. All of them throw UsageError for other dimensions.

/// Carved balls, live cells and explored centers over the unit square.
std::string svg_exploration(std::span<const Ball> carved, std::span<const Cell> live, std::span<const Point> centers,
                            std::span<const Point> points = {});

/// Input points, the iterate path p_0, p_1, ... and the query.
std::string svg_hull(std::span<const Point> points, const HullRun& run, const Point& query);

/// Points colored by cluster; centers drawn larger.
std::string svg_clustering(std::span<const Point> points, const DensityClustering& clustering);

}  // namespace pxprobe::report
