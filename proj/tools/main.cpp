// pxprobe: experiments on point sets seen only through proximity probes.

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pxprobe/datasets.hpp"
#include "pxprobe/density.hpp"
#include "pxprobe/error.hpp"
#include "pxprobe/explorer.hpp"
#include "pxprobe/hull.hpp"
#include "pxprobe/io.hpp"
#include "pxprobe/oracles.hpp"
#include "pxprobe/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace pxprobe;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitIo = 4;

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

struct Common {
  std::string points;
  std::string oracle;
  std::string report;
  std::string svg;
  std::uint64_t seed = 0;
  bool timing = false;
};

void add_common(CLI::App* cmd, Common& c, bool svg = true) {
  cmd->add_option("--seed", c.seed, "Seed for every random choice")->capture_default_str();
  cmd->add_option("--report", c.report, "Write the JSON report here (default: stdout)");
  if (svg) cmd->add_option("--svg", c.svg, "Write a 2-D SVG plot here");
  cmd->add_flag("--timing", c.timing, "Include wall time in the report");
}

void add_input(CLI::App* cmd, Common& c) {
  auto* pts = cmd->add_option("--points", c.points, "CSV point file");
  auto* orc = cmd->add_option("--oracle", c.oracle, "Oracle config JSON {kind, params, dim}");
  pts->excludes(orc);
}

struct Input {
  std::optional<std::vector<Point>> points;
  std::unique_ptr<NnOracle> oracle;
  std::string digest;
};

/// `adversarial` swaps the finite-set oracle for the worst-legal-ANN one.
Input load_input(const Common& c, bool adversarial) {
  Input in;
  if (!c.points.empty()) {
    const std::string bytes = io::read_file(c.points);
    in.digest = sha256_hex(bytes);
    in.points = io::parse_points_csv(bytes, c.points);
    if (adversarial) {
      in.oracle = std::make_unique<AdversarialAnnOracle>(*in.points);
    } else {
      in.oracle = std::make_unique<FiniteSetOracle>(*in.points);
    }
  } else if (!c.oracle.empty()) {
    in.digest = sha256_hex(io::read_file(c.oracle));
    in.oracle = io::read_oracle_config(c.oracle);
    if (const auto* f = dynamic_cast<const FiniteSetOracle*>(in.oracle.get())) {
      in.points = f->points();
      if (adversarial && !dynamic_cast<const AdversarialAnnOracle*>(f)) {
        in.oracle = std::make_unique<AdversarialAnnOracle>(*in.points);
      }
    }
  } else {
    throw UsageError("one of --points or --oracle is required");
  }
  return in;
}

CarveConfig carve_config(int max_depth, double rho) {
  CarveConfig cfg;
  cfg.max_depth = max_depth;
  cfg.rho = rho;
  if (const char* env = std::getenv("PXPROBE_MAX_CELLS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw UsageError("PXPROBE_MAX_CELLS must be a positive integer");
    cfg.max_cells = static_cast<std::size_t>(v);
  }
  if (!(rho > 0.0 && rho < 1.0)) throw UsageError("--rho must lie in (0, 1)");
  if (max_depth < 1 || max_depth > 60) throw UsageError("--max-depth must lie in [1, 60]");
  return cfg;
}

void emit(const Common& c, const std::vector<std::string>& argv, const std::string& command, const std::string& digest,
          json result, std::chrono::steady_clock::time_point start) {
  json rep = {{"command", command}, {"args", argv}, {"seed", c.seed}, {"input_digest", digest}};
  rep["result"] = std::move(result);
  if (c.timing) {
    rep["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  const std::string text = rep.dump(2) + "\n";
  if (c.report.empty()) {
    std::cout << text;
  } else {
    io::write_file(c.report, text);
  }
}

void require_planar_svg(const Common& c, std::size_t dim) {
  if (!c.svg.empty() && dim != 2) throw UsageError("--svg is only available for 2-D inputs");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric computations on point sets accessible through nearest-neighbour probes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "pxprobe 0.1.0");
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto start = std::chrono::steady_clock::now();

  // generate
  auto* gen = app.add_subcommand("generate", "Write a synthetic point set as CSV");
  std::string shape = "uniform";
  std::size_t gen_n = 100, gen_d = 2;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--shape", shape)->check(CLI::IsMember({"uniform", "circle", "clusters", "counterexample"}))
      ->capture_default_str();
  gen->add_option("--n", gen_n, "Number of points")->capture_default_str();
  gen->add_option("--dim,-d", gen_d, "Dimension (ignored by counterexample)")->capture_default_str();
  gen->add_option("--seed", gen_seed)->capture_default_str();
  gen->add_option("--out,-o", gen_out, "Output CSV path")->required();

  // greedy
  Common greedy_c;
  auto* greedy = app.add_subcommand("greedy", "Greedy permutation through NN or ANN probes");
  std::size_t iters = 0;
  std::string greedy_mode = "exact";
  double greedy_eps = 0.1, rho = 0.25;
  int max_depth = 20;
  bool greedy_adv = false;
  add_input(greedy, greedy_c);
  greedy->add_option("--iters", iters, "Number of probes")->required()->check(CLI::PositiveNumber);
  greedy->add_option("--mode", greedy_mode)->check(CLI::IsMember({"exact", "ann"}))->capture_default_str();
  greedy->add_option("--eps", greedy_eps, "ANN factor, in (0, 1)")->capture_default_str();
  greedy->add_flag("--adversarial", greedy_adv, "Answer ANN probes with the worst legal point");
  greedy->add_option("--rho", rho)->capture_default_str();
  greedy->add_option("--max-depth", max_depth)->capture_default_str();
  add_common(greedy, greedy_c);

  // diameter
  Common diam_c;
  auto* diam = app.add_subcommand("diameter", "Constant-factor diameter estimate from NN probes");
  add_input(diam, diam_c);
  diam->add_option("--rho", rho)->capture_default_str();
  diam->add_option("--max-depth", max_depth)->capture_default_str();
  add_common(diam, diam_c, false);

  // hull
  Common hull_c;
  auto* hull = app.add_subcommand("hull", "Approximate convex-hull membership");
  std::string query_text, hull_mode = "exact-extremal";
  double hull_eps = 0.1;
  std::optional<double> delta_big;
  bool hull_adv = false;
  add_input(hull, hull_c);
  hull->add_option("--query,-q", query_text, "Query point, e.g. 1.5,0.5")->required();
  hull->add_option("--eps", hull_eps)->capture_default_str();
  hull->add_option("--mode", hull_mode)->check(CLI::IsMember({"exact-extremal", "approx-extremal", "ann"}))
      ->capture_default_str();
  hull->add_option("--delta-big", delta_big, "Diameter bound with diam <= D <= 2 diam (default: estimated)");
  hull->add_flag("--adversarial", hull_adv, "Worst legal answers for approx-extremal and ann modes");
  add_common(hull, hull_c);

  // density
  Common dens_c;
  auto* dens = app.add_subcommand("density", "k-density (balanced Voronoi) clustering");
  std::size_t k = 0;
  std::optional<std::size_t> initial_sample;
  std::string planar = "auto";
  dens->add_option("--points", dens_c.points, "CSV point file")->required();
  dens->add_option("--k", k, "Maximum cluster size")->required();
  dens->add_option("--initial-sample", initial_sample, "Override the first sample size");
  dens->add_option("--planar", planar, "Planar sample schedule")->check(CLI::IsMember({"auto", "yes", "no"}))
      ->capture_default_str();
  add_common(dens, dens_c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) {
      io::write_points_csv(gen_out, generate_points(shape, gen_n, gen_d, gen_seed));
      return 0;
    }

    if (*greedy) {
      ExploreOptions opt;
      opt.mode = greedy_mode == "ann" ? ExploreMode::kAnn : ExploreMode::kExact;
      opt.eps = greedy_eps;
      opt.carve = carve_config(max_depth, rho);
      Input in = load_input(greedy_c, greedy_adv);
      require_planar_svg(greedy_c, in.oracle->dim());
      Explorer ex(*in.oracle, opt);
      for (std::size_t i = 0; i < iters && ex.step(); ++i) {
      }
      if (!greedy_c.svg.empty()) {
        const std::vector<Ball> balls = ex.carved_balls();
        const std::vector<Cell> cells = ex.domain().live_cells();
        const std::vector<Point> centers = ex.trace().centers();
        const std::vector<Point> pts = in.points.value_or(std::vector<Point>{});
        io::write_file(greedy_c.svg, report::svg_exploration(balls, cells, centers, pts));
      }
      emit(greedy_c, args, "greedy", in.digest, report::to_json(ex.trace()), start);
      return 0;
    }

    if (*diam) {
      Input in = load_input(diam_c, false);
      const DiameterEstimate e = estimate_diameter(*in.oracle, carve_config(max_depth, rho));
      json result = report::to_json(e);
      result["probe_count"] = in.oracle->stats().total();
      emit(diam_c, args, "diameter", in.digest, std::move(result), start);
      return 0;
    }

    if (*hull) {
      if (!(hull_eps > 0.0 && hull_eps <= 1.0)) throw UsageError("--eps must lie in (0, 1]");
      Point q;
      try {
        q = io::parse_point(query_text);
      } catch (const InputError& e) {
        throw UsageError(std::string("--query: ") + e.what());
      }
      const bool ann = hull_mode == "ann";
      Input in = load_input(hull_c, ann && hull_adv);
      if (!ann && !in.points) throw UsageError("extremal modes need an explicit point set (--points)");
      require_planar_svg(hull_c, in.oracle->dim());
      double bound = 0.0;
      if (delta_big) {
        bound = *delta_big;
      } else {
        bound = delta_big_from_estimate(estimate_diameter(*in.oracle, carve_config(20, 0.25)));
      }
      const HullConfig cfg = make_hull_config(hull_eps, bound);
      HullRun run;
      if (ann) {
        run = membership_ann(q, *in.oracle, cfg);
      } else if (hull_mode == "approx-extremal") {
        std::unique_ptr<ExtremalOracle> ext;
        if (hull_adv) {
          ext = std::make_unique<AdversarialExtremalOracle>(*in.points, hull_eps / 4.0);
        } else {
          ext = std::make_unique<FiniteExtremalOracle>(*in.points);
        }
        run = membership_approx_extremal(q, *ext, cfg);
      } else {
        FiniteExtremalOracle ext(*in.points);
        run = membership_exact(q, ext, cfg);
      }
      if (!hull_c.svg.empty()) {
        const std::vector<Point> pts = in.points.value_or(std::vector<Point>{});
        io::write_file(hull_c.svg, report::svg_hull(pts, run, q));
      }
      json result = report::to_json(run);
      result["query"] = report::to_json(q);
      emit(hull_c, args, "hull", in.digest, std::move(result), start);
      return 0;
    }

    if (*dens) {
      const std::string bytes = io::read_file(dens_c.points);
      const std::vector<Point> pts = io::parse_points_csv(bytes, dens_c.points);
      require_planar_svg(dens_c, pts.front().dim());
      DensityOptions opt;
      opt.seed = dens_c.seed;
      opt.planar = planar == "yes" || (planar == "auto" && pts.front().dim() == 2);
      opt.initial_sample = initial_sample;
      const DensityClustering c = k_density_centers(pts, k, opt);
      if (!dens_c.svg.empty()) io::write_file(dens_c.svg, report::svg_clustering(pts, c));
      emit(dens_c, args, "density", sha256_hex(bytes), report::to_json(c), start);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "pxprobe: usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "pxprobe: input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const IoError& e) {
    std::cerr << "pxprobe: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "pxprobe: internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
