#include "pxprobe/report.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "pxprobe/error.hpp"

namespace pxprobe::report {

using nlohmann::json;

json to_json(const Point& p) { return json(p.values()); }

std::string_view to_string(ExploreMode mode) { return mode == ExploreMode::kExact ? "exact" : "ann"; }

json to_json(const GreedyTrace& trace) {
  json steps = json::array();
  for (const GreedyStep& s : trace.steps) {
    steps.push_back({{"q", to_json(s.q)},
                     {"nnp", to_json(s.nnp)},
                     {"r", s.r},
                     {"reported", s.reported},
                     {"carve_radius", s.carve_radius}});
  }
  json out = {{"mode", to_string(trace.mode)}};
  if (trace.mode == ExploreMode::kAnn) out["eps"] = trace.eps;
  out["steps"] = std::move(steps);
  out["probe_count"] = trace.probes.total();
  out["live_cells_remaining"] = trace.live_cells_remaining;
  out["complete"] = trace.complete;
  out["resolution_capped"] = trace.resolution_capped;
  json centers = json::array();
  for (const Point& c : trace.centers()) centers.push_back(to_json(c));
  out["centers"] = std::move(centers);
  return out;
}

json to_json(const HullRun& run) {
  json cert = json::object();
  if (run.certificate.witness) {
    cert["witness"] = to_json(*run.certificate.witness);
    json support = json::array();
    for (const Point& s : run.support) support.push_back(to_json(s));
    cert["support"] = std::move(support);
    cert["weights"] = run.iterates.back().weights;
  }
  if (run.certificate.direction) {
    cert["direction"] = to_json(*run.certificate.direction);
    cert["support_value"] = run.certificate.support_value;
    cert["slack"] = run.certificate.slack;
    cert["query_value"] = run.certificate.query_value;
  }
  json iterates = json::array();
  for (const HullIterate& it : run.iterates) iterates.push_back({{"p", to_json(it.p)}, {"d", it.d}});
  return {{"verdict", to_string(run.verdict)},
          {"mode", to_string(run.mode)},
          {"iterations", run.iterations},
          {"probes", run.probes},
          {"budget", run.budget},
          {"budget_exhausted", run.budget_exhausted},
          {"eps", run.eps},
          {"delta_big", run.delta_big},
          {"delta_small", run.delta_small},
          {"tau", run.tau},
          {"certificate", std::move(cert)},
          {"iterates", std::move(iterates)}};
}

json to_json(const DensityClustering& c) {
  json centers = json::array();
  for (const Point& p : c.centers) centers.push_back(to_json(p));
  return {{"k", c.k},
          {"centers", std::move(centers)},
          {"center_indices", c.center_indices},
          {"sizes", c.cluster_sizes},
          {"max_size", c.max_size},
          {"center_count", c.centers.size()},
          {"balanced", c.balanced},
          {"seed", c.seed},
          {"attempts", c.attempts}};
}

json to_json(const DiameterEstimate& e) {
  return {{"estimate", e.estimate},
          {"centers_diameter", e.centers_diameter},
          {"last_radius", e.last_radius},
          {"iterations", e.iterations},
          {"distinct_centers", e.distinct_centers},
          {"single_center", e.single_center}};
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kCanvas = 600.0;
constexpr double kMargin = 20.0;

class Canvas {
 public:
  Canvas(double x0, double y0, double x1, double y1) : x0_(x0), y0_(y0) {
    const double span = std::max({x1 - x0, y1 - y0, 1e-9});
    scale_ = (kCanvas - 2 * kMargin) / span;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n"
                  "<rect width=\"100%%\" height=\"100%%\" fill=\"white\"/>\n",
                  kCanvas, kCanvas, kCanvas, kCanvas);
    out_ = buf;
  }

  double x(double v) const { return kMargin + (v - x0_) * scale_; }
  double y(double v) const { return kCanvas - kMargin - (v - y0_) * scale_; }
  double len(double v) const { return v * scale_; }

  void circle(const Point& c, double r_world, const char* style) {
    emit("<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" %s/>\n", x(c[0]), y(c[1]), len(r_world), style);
  }
  void dot(const Point& c, double r_px, const char* style) {
    emit("<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.2f\" %s/>\n", x(c[0]), y(c[1]), r_px, style);
  }
  void square(const Cell& c, const char* style) {
    emit("<rect x=\"%.3f\" y=\"%.3f\" width=\"%.3f\" height=\"%.3f\" %s/>\n", x(c.low[0]), y(c.low[1] + c.side),
         len(c.side), len(c.side), style);
  }
  void line(const Point& a, const Point& b, const char* style) {
    emit("<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" %s/>\n", x(a[0]), y(a[1]), x(b[0]), y(b[1]), style);
  }
  void raw(const std::string& s) { out_ += s; }

  std::string finish() { return out_ + "</svg>\n"; }

 private:
  template <class... Args>
  void emit(const char* fmt, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    out_ += buf;
  }

  double x0_, y0_, scale_ = 1.0;
  std::string out_;
};

void require_planar(std::span<const Point> pts) {
  for (const Point& p : pts) {
    if (p.dim() != 2) throw UsageError("svg output needs 2-D points");
  }
}

struct Box {
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
  double x1 = -x0, y1 = -x0;
  void add(const Point& p) {
    x0 = std::min(x0, p[0]);
    y0 = std::min(y0, p[1]);
    x1 = std::max(x1, p[0]);
    y1 = std::max(y1, p[1]);
  }
  Canvas canvas() const {
    const double pad = 0.05 * std::max({x1 - x0, y1 - y0, 1e-6});
    return Canvas(x0 - pad, y0 - pad, x1 + pad, y1 + pad);
  }
};

std::string hue_style(std::size_t i, bool center) {
  const unsigned hue = static_cast<unsigned>((i * 137) % 360);
  char buf[120];
  std::snprintf(buf, sizeof buf, "fill=\"hsl(%u,70%%,%s)\"%s", hue, center ? "35%" : "55%",
                center ? " stroke=\"black\" stroke-width=\"1\"" : "");
  return buf;
}

}  // namespace

std::string svg_exploration(std::span<const Ball> carved, std::span<const Cell> live, std::span<const Point> centers,
                            std::span<const Point> points) {
  require_planar(centers);
  require_planar(points);
  Canvas canvas(0.0, 0.0, 1.0, 1.0);
  canvas.square(Cell{Point{0.0, 0.0}, 1.0}, "fill=\"none\" stroke=\"black\"");
  for (const Cell& c : live) canvas.square(c, "fill=\"#fde68a\" stroke=\"#d97706\" stroke-width=\"0.3\"");
  for (const Ball& b : carved) {
    if (b.center.dim() != 2) throw UsageError("svg output needs 2-D points");
    canvas.circle(b.center, b.radius, "fill=\"#93c5fd\" fill-opacity=\"0.15\" stroke=\"#1d4ed8\" stroke-width=\"0.5\"");
  }
  for (const Point& p : points) canvas.dot(p, 1.5, "fill=\"#555\"");
  for (const Point& c : centers) canvas.dot(c, 3.5, "fill=\"#dc2626\"");
  return canvas.finish();
}

std::string svg_hull(std::span<const Point> points, const HullRun& run, const Point& query) {
  require_planar(points);
  require_planar(std::span<const Point>(&query, 1));
  Box box;
  for (const Point& p : points) box.add(p);
  box.add(query);
  Canvas canvas = box.canvas();
  for (const Point& p : points) canvas.dot(p, 2.0, "fill=\"#555\"");
  for (std::size_t i = 1; i < run.iterates.size(); ++i) {
    canvas.line(run.iterates[i - 1].p, run.iterates[i].p, "stroke=\"#2563eb\" stroke-width=\"1.2\"");
  }
  for (const HullIterate& it : run.iterates) canvas.dot(it.p, 2.5, "fill=\"#2563eb\"");
  canvas.dot(query, 4.0, run.verdict == Verdict::kIn ? "fill=\"#16a34a\"" : "fill=\"#dc2626\"");
  return canvas.finish();
}

std::string svg_clustering(std::span<const Point> points, const DensityClustering& clustering) {
  require_planar(points);
  Box box;
  for (const Point& p : points) box.add(p);
  Canvas canvas = box.canvas();
  for (std::size_t i = 0; i < points.size(); ++i) {
    canvas.dot(points[i], 2.5, hue_style(clustering.assignment[i], false).c_str());
  }
  for (std::size_t c = 0; c < clustering.centers.size(); ++c) {
    canvas.dot(clustering.centers[c], 4.5, hue_style(c, true).c_str());
  }
  return canvas.finish();
}

}  // namespace pxprobe::report
