#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pxprobe/cones.hpp"
#include "pxprobe/datasets.hpp"
#include "pxprobe/density.hpp"
#include "pxprobe/error.hpp"
#include "pxprobe/explorer.hpp"
#include "pxprobe/hull.hpp"
#include "pxprobe/io.hpp"
#include "pxprobe/oracles.hpp"
#include "pxprobe/reference.hpp"
#include "pxprobe/report.hpp"

namespace py = pybind11;
using namespace pxprobe;

namespace {

using Rows = std::vector<std::vector<double>>;

std::vector<Point> to_points(const Rows& rows) {
  std::vector<Point> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(r);
  return out;
}

Rows to_rows(const std::vector<Point>& points) {
  Rows out;
  out.reserve(points.size());
  for (const Point& p : points) out.push_back(p.values());
  return out;
}

// Results cross the boundary as JSON text; the Python package decodes them.
std::string dump(const nlohmann::json& j) { return j.dump(); }

/// Python-side handle on a proximity oracle.
class PyOracle {
 public:
  explicit PyOracle(std::unique_ptr<NnOracle> oracle, std::optional<std::vector<Point>> points = {})
      : oracle_(std::move(oracle)), points_(std::move(points)) {}

  static PyOracle from_points(const Rows& rows, bool adversarial) {
    std::vector<Point> pts = to_points(rows);
    std::unique_ptr<NnOracle> o;
    if (adversarial) {
      o = std::make_unique<AdversarialAnnOracle>(pts);
    } else {
      o = std::make_unique<FiniteSetOracle>(pts);
    }
    return PyOracle(std::move(o), std::move(pts));
  }

  static PyOracle from_config(const std::string& text, const std::string& base_dir) {
    nlohmann::json config;
    try {
      config = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("oracle config: ") + e.what());
    }
    return PyOracle(io::make_oracle(config, base_dir));
  }

  const NnOracle& get() const { return *oracle_; }
  NnOracle& get() { return *oracle_; }
  const std::optional<std::vector<Point>>& points() const { return points_; }

 private:
  std::unique_ptr<NnOracle> oracle_;
  std::optional<std::vector<Point>> points_;
};

py::tuple answer_tuple(const NnAnswer& a) { return py::make_tuple(a.point.values(), a.distance); }

CarveConfig carve_config(double rho, int max_depth, std::size_t max_cells) {
  CarveConfig c;
  c.rho = rho;
  c.max_depth = max_depth;
  c.max_cells = max_cells;
  return c;
}

std::string explore_json(const PyOracle& oracle, std::size_t iterations, const std::string& mode, double eps,
                         double rho, int max_depth, std::size_t max_cells) {
  ExploreOptions opt;
  if (mode == "exact") {
    opt.mode = ExploreMode::kExact;
  } else if (mode == "ann") {
    opt.mode = ExploreMode::kAnn;
    opt.eps = eps;
  } else {
    throw UsageError("explore: mode must be 'exact' or 'ann'");
  }
  opt.carve = carve_config(rho, max_depth, max_cells);
  py::gil_scoped_release release;
  return dump(report::to_json(explore(oracle.get(), iterations, opt)));
}

std::string diameter_json(const PyOracle& oracle, double rho, int max_depth) {
  py::gil_scoped_release release;
  return dump(report::to_json(estimate_diameter(oracle.get(), carve_config(rho, max_depth, CarveConfig{}.max_cells))));
}

std::string hull_json(const Rows& rows, const std::vector<double>& query, double eps, const std::string& mode,
                      std::optional<double> delta_big, bool adversarial) {
  const std::vector<Point> pts = to_points(rows);
  if (pts.empty()) throw UsageError("hull: empty point set");
  const Point q(query);
  py::gil_scoped_release release;

  std::unique_ptr<NnOracle> nn;
  if (adversarial) {
    nn = std::make_unique<AdversarialAnnOracle>(pts);
  } else {
    nn = std::make_unique<FiniteSetOracle>(pts);
  }
  const double bound = delta_big ? *delta_big : delta_big_from_estimate(estimate_diameter(*nn));
  const HullConfig cfg = make_hull_config(eps, bound);
  nn->reset_stats();

  HullRun run;
  if (mode == "ann") {
    run = membership_ann(q, *nn, cfg);
  } else if (mode == "approx-extremal") {
    std::unique_ptr<ExtremalOracle> ext;
    if (adversarial) {
      ext = std::make_unique<AdversarialExtremalOracle>(pts, eps / 4.0);
    } else {
      ext = std::make_unique<FiniteExtremalOracle>(pts);
    }
    run = membership_approx_extremal(q, *ext, cfg);
  } else if (mode == "exact-extremal") {
    FiniteExtremalOracle ext(pts);
    run = membership_exact(q, ext, cfg);
  } else {
    throw UsageError("hull: mode must be 'exact-extremal', 'approx-extremal' or 'ann'");
  }
  return dump(report::to_json(run));
}

std::string density_json(const Rows& rows, std::size_t k, std::uint64_t seed, std::optional<bool> planar,
                         std::optional<std::size_t> initial_sample) {
  const std::vector<Point> pts = to_points(rows);
  DensityOptions opt;
  opt.seed = seed;
  opt.planar = planar.value_or(!pts.empty() && pts.front().dim() == 2);
  opt.initial_sample = initial_sample;
  py::gil_scoped_release release;
  return dump(report::to_json(k_density_centers(pts, k, opt)));
}

std::string voronoi_json(const Rows& rows, const std::vector<std::size_t>& centers) {
  const std::vector<Point> pts = to_points(rows);
  return dump(report::to_json(voronoi_partition(pts, centers)));
}

py::dict gonzalez_dict(const Rows& rows, std::size_t k) {
  const std::vector<Point> pts = to_points(rows);
  const reference::GonzalezResult g = reference::gonzalez(pts, k);
  py::dict d;
  d["centers"] = to_rows(g.centers);
  d["indices"] = g.indices;
  d["radii"] = g.radii;
  return d;
}

}  // namespace

PYBIND11_MODULE(_pxprobe, m) {
  m.doc() = "Exploring point sets through nearest-neighbour probes";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);
  // Registered last so it is tried first; UsageError derives from invalid_argument.
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

  py::class_<PyOracle>(m, "Oracle")
      .def_static("from_points", &PyOracle::from_points, py::arg("points"), py::arg("adversarial") = false)
      .def_static("from_config", &PyOracle::from_config, py::arg("config_json"), py::arg("base_dir") = "")
      .def_property_readonly("dim", [](const PyOracle& o) { return o.get().dim(); })
      .def_property_readonly("kind", [](const PyOracle& o) { return std::string(to_string(o.get().kind())); })
      .def("nn_query", [](const PyOracle& o, const std::vector<double>& q) { return answer_tuple(o.get().nn_query(Point(q))); },
           py::arg("q"))
      .def("ann_query",
           [](const PyOracle& o, const std::vector<double>& q, double eps) {
             return answer_tuple(o.get().ann_query(Point(q), eps));
           },
           py::arg("q"), py::arg("eps"))
      .def("contains", [](const PyOracle& o, const std::vector<double>& x, double tol) { return o.get().contains(Point(x), tol); },
           py::arg("x"), py::arg("tol") = 1e-9)
      .def("stats",
           [](const PyOracle& o) {
             const OracleStats s = o.get().stats();
             py::dict d;
             d["exact"] = s.exact_queries;
             d["ann"] = s.ann_queries;
             d["total"] = s.total();
             return d;
           })
      .def("reset_stats", [](PyOracle& o) { o.get().reset_stats(); })
      .def("points", [](const PyOracle& o) -> std::optional<Rows> {
        if (!o.points()) return std::nullopt;
        return to_rows(*o.points());
      });

  m.def("_explore", &explore_json, py::arg("oracle"), py::arg("iterations"), py::arg("mode") = "exact",
        py::arg("eps") = 0.1, py::arg("rho") = 0.25, py::arg("max_depth") = 20,
        py::arg("max_cells") = CarveConfig{}.max_cells);
  m.def("_estimate_diameter", &diameter_json, py::arg("oracle"), py::arg("rho") = 0.25, py::arg("max_depth") = 20);
  m.def("_hull_membership", &hull_json, py::arg("points"), py::arg("query"), py::arg("eps") = 0.1,
        py::arg("mode") = "exact-extremal", py::arg("delta_big") = py::none(), py::arg("adversarial") = false);
  m.def("_k_density_centers", &density_json, py::arg("points"), py::arg("k"), py::arg("seed") = 0,
        py::arg("planar") = py::none(), py::arg("initial_sample") = py::none());
  m.def("_voronoi_partition", &voronoi_json, py::arg("points"), py::arg("center_indices"));

  m.def("generate_points",
        [](const std::string& shape, std::size_t n, std::size_t d, std::uint64_t seed) {
          return to_rows(generate_points(shape, n, d, seed));
        },
        py::arg("shape"), py::arg("n"), py::arg("dim") = 2, py::arg("seed") = 0);
  m.def("counterexample_set", [](std::size_t n) { return to_rows(counterexample_set(n)); }, py::arg("n"));
  m.def("density_initial_sample", &density_initial_sample, py::arg("n"), py::arg("k"), py::arg("dim"),
        py::arg("planar"));
  m.def("gonzalez", &gonzalez_dict, py::arg("points"), py::arg("k"));
  m.def("exact_hull_distance",
        [](const std::vector<double>& q, const Rows& rows) {
          const std::vector<Point> pts = to_points(rows);
          return reference::exact_hull_distance(Point(q), pts);
        },
        py::arg("q"), py::arg("points"));
  m.def("hull_iteration_budget", &hull_iteration_budget, py::arg("eps"));
  m.def("cone_cover_size", &cone_cover_size, py::arg("dim"), py::arg("angular_diameter"));
  m.def("cone_count", &cone_count, py::arg("dim"));
}
