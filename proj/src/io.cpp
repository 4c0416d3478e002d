#include "pxprobe/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pxprobe/error.hpp"

namespace pxprobe::io {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) throw IoError("error writing " + path.string());
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view field, std::string_view where) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw InputError(std::string(where) + ": not a number: '" + std::string(field) + "'");
  }
  if (!std::isfinite(value)) throw InputError(std::string(where) + ": non-finite value");
  return value;
}

std::vector<double> parse_row(std::string_view line, std::string_view where) {
  std::vector<double> row;
  while (true) {
    const auto comma = line.find(',');
    row.push_back(parse_number(line.substr(0, comma), where));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return row;
}

}  // namespace

std::vector<Point> parse_points_csv(std::string_view text, std::string_view source) {
  std::vector<Point> points;
  std::size_t dim = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string_view rest = trim(line.substr(1));
      if (rest.starts_with("dim=")) {
        if (!points.empty() || dim != 0) throw InputError(where + ": dim header must come first");
        const double d = parse_number(rest.substr(4), where);
        if (d < 1 || d != std::floor(d)) throw InputError(where + ": bad dimension");
        dim = static_cast<std::size_t>(d);
      }
      continue;
    }
    std::vector<double> row = parse_row(line, where);
    if (dim == 0) dim = row.size();
    if (row.size() != dim) {
      throw InputError(where + ": expected " + std::to_string(dim) + " columns, got " + std::to_string(row.size()));
    }
    points.emplace_back(std::move(row));
  }
  if (points.empty()) throw InputError(std::string(source) + ": no points");
  return points;
}

std::vector<Point> read_points_csv(const std::filesystem::path& path) {
  return parse_points_csv(read_file(path), path.string());
}

std::string format_points_csv(std::span<const Point> points, bool dim_header) {
  std::string out;
  char buf[32];
  if (dim_header && !points.empty()) out += "# dim=" + std::to_string(points.front().dim()) + "\n";
  for (const Point& p : points) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
      if (i) out += ',';
      std::snprintf(buf, sizeof buf, "%.17g", p[i]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

void write_points_csv(const std::filesystem::path& path, std::span<const Point> points, bool dim_header) {
  write_file(path, format_points_csv(points, dim_header));
}

Point parse_point(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw InputError("empty point");
  return Point(parse_row(text, "point"));
}

namespace {

Point point_from(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw InputError(std::string("oracle config: ") + what + " must be a nonempty array");
  std::vector<double> c;
  for (const json& v : j) {
    if (!v.is_number()) throw InputError(std::string("oracle config: ") + what + " has a non-numeric entry");
    c.push_back(v.get<double>());
  }
  return Point(std::move(c));
}

double number_from(const json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string("oracle config: ") + what + " must be a number");
  return j.get<double>();
}

const json& field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError(std::string("oracle config: missing '") + key + "'");
  return *it;
}

}  // namespace

namespace {

std::unique_ptr<NnOracle> build_oracle(const json& config, const std::filesystem::path& base_dir) {
  if (!config.is_object()) throw InputError("oracle config: expected a JSON object");
  const json& kind_j = field(config, "kind");
  if (!kind_j.is_string()) throw InputError("oracle config: kind must be a string");
  const std::string kind = kind_j.get<std::string>();
  const json params = config.value("params", json::object());

  std::unique_ptr<NnOracle> oracle;
  if (kind == "finite-set") {
    std::vector<Point> points;
    if (params.contains("points")) {
      for (const json& p : params["points"]) points.push_back(point_from(p, "points[]"));
    } else if (params.contains("path")) {
      std::filesystem::path p = params["path"].get<std::string>();
      if (p.is_relative()) p = base_dir / p;
      points = read_points_csv(p);
    } else {
      throw InputError("oracle config: finite-set needs params.points or params.path");
    }
    if (points.empty()) throw InputError("oracle config: finite-set is empty");
    if (params.value("adversarial", false)) {
      oracle = std::make_unique<AdversarialAnnOracle>(std::move(points));
    } else {
      oracle = std::make_unique<FiniteSetOracle>(std::move(points));
    }
  } else if (kind == "sphere") {
    oracle = std::make_unique<SphereOracle>(point_from(field(params, "center"), "center"),
                                            number_from(field(params, "radius"), "radius"));
  } else if (kind == "ball-union") {
    std::vector<Ball> balls;
    for (const json& b : field(params, "balls")) {
      balls.push_back(Ball{point_from(field(b, "center"), "center"), number_from(field(b, "radius"), "radius")});
    }
    if (balls.empty()) throw InputError("oracle config: ball-union needs at least one ball");
    oracle = std::make_unique<BallUnionOracle>(std::move(balls));
  } else if (kind == "box-boundary") {
    oracle = std::make_unique<BoxBoundaryOracle>(point_from(field(params, "low"), "low"),
                                                 point_from(field(params, "high"), "high"));
  } else {
    throw InputError("oracle config: unknown kind '" + kind + "'");
  }

  if (config.contains("dim")) {
    const json& d = config["dim"];
    if (!d.is_number_unsigned() || d.get<std::size_t>() != oracle->dim()) {
      throw InputError("oracle config: dim does not match the described set");
    }
  }
  return oracle;
}

}  // namespace

std::unique_ptr<NnOracle> make_oracle(const json& config, const std::filesystem::path& base_dir) {
  try {
    return build_oracle(config, base_dir);
  } catch (const json::exception& e) {
    throw InputError(std::string("oracle config: ") + e.what());
  } catch (const UsageError& e) {
    throw InputError(std::string("oracle config: ") + e.what());
  }
}

std::unique_ptr<NnOracle> read_oracle_config(const std::filesystem::path& path) {
  json config;
  try {
    config = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return make_oracle(config, path.parent_path());
}

}  // namespace pxprobe::io
