#pragma once

#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pxprobe/geometry.hpp"
#include "pxprobe/oracles.hpp"

namespace pxprobe::io {

/// Whole file as bytes. Throws IoError when it cannot be read.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// CSV point list: one point per row, comma separated, optional leading
/// `# dim=d` line. Other `#` lines and blank lines are skipped.
std::vector<Point> parse_points_csv(std::string_view text, std::string_view source = "<input>");
std::vector<Point> read_points_csv(const std::filesystem::path& path);

/// Rows printed with %.17g, so values round-trip exactly.
std::string format_points_csv(std::span<const Point> points, bool dim_header = true);
void write_points_csv(const std::filesystem::path& path, std::span<const Point> points, bool dim_header = true);

/// "1.5,0.5" -> Point. Throws InputError on malformed numbers.
Point parse_point(std::string_view text);

/// Oracle from a config object {kind, dim, params}:
///   finite-set    params {points: [[...], ...]} or {path: "p.csv"}, optional adversarial: bool
///   sphere        params {center: [...], radius: r}
///   ball-union    params {balls: [{center: [...], radius: r}, ...]}
///   box-boundary  params {low: [...], high: [...]}
/// Relative paths resolve against `base_dir`.
std::unique_ptr<NnOracle> make_oracle(const nlohmann::json& config, const std::filesystem::path& base_dir = {});
std::unique_ptr<NnOracle> read_oracle_config(const std::filesystem::path& path);

}  // namespace pxprobe::io
