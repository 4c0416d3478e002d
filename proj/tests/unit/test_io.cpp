#include <catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "pxprobe/density.hpp"
#include "pxprobe/error.hpp"
#include "pxprobe/io.hpp"
#include "pxprobe/report.hpp"

using namespace pxprobe;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / ("pxprobe_io_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("csv parsing") {
  const auto pts = io::parse_points_csv("# dim=2\n0,0\n 1.5 , -2e-3\n\n# note\n3,4\n");
  REQUIRE(pts.size() == 3);
  CHECK(pts[1] == Point{1.5, -0.002});
  CHECK_THROWS_AS(io::parse_points_csv("0,0\n1\n"), InputError);
  CHECK_THROWS_AS(io::parse_points_csv("0,abc\n"), InputError);
  CHECK_THROWS_AS(io::parse_points_csv("# dim=3\n0,0\n"), InputError);
  CHECK_THROWS_AS(io::parse_points_csv(""), InputError);
  CHECK_THROWS_AS(io::parse_points_csv("nan,1\n"), InputError);
}

TEST_CASE("csv round trip is exact") {
  const std::vector<Point> pts{{0.1, 1.0 / 3.0}, {std::sqrt(2.0), -1e-300}};
  const std::string text = io::format_points_csv(pts);
  CHECK(text.starts_with("# dim=2\n"));
  CHECK(io::parse_points_csv(text) == pts);
}

TEST_CASE("file helpers") {
  const fs::path dir = temp_dir();
  const std::vector<Point> pts{{0.25, 0.5}};
  io::write_points_csv(dir / "p.csv", pts);
  CHECK(io::read_points_csv(dir / "p.csv") == pts);
  CHECK_THROWS_AS(io::read_file(dir / "missing.csv"), IoError);
  CHECK_THROWS_AS(io::write_file(dir / "no" / "such" / "dir.csv", "x"), IoError);
  fs::remove_all(dir);
}

TEST_CASE("parse_point") {
  CHECK(io::parse_point("1.5,0.5") == Point{1.5, 0.5});
  CHECK_THROWS_AS(io::parse_point("1.5,"), InputError);
}

TEST_CASE("oracle configs") {
  using nlohmann::json;
  auto finite = io::make_oracle(json::parse(R"({"kind":"finite-set","dim":2,"params":{"points":[[0,0],[1,0]]}})"));
  CHECK(finite->kind() == OracleKind::kFiniteSet);
  CHECK(finite->nn_query(Point{0.9, 0}).point == Point{1, 0});

  auto sphere = io::make_oracle(json::parse(R"({"kind":"sphere","params":{"center":[0.5,0.5],"radius":0.25}})"));
  CHECK(sphere->kind() == OracleKind::kSphere);
  auto balls = io::make_oracle(json::parse(R"({"kind":"ball-union","params":{"balls":[{"center":[0.5,0.5],"radius":0.2}]}})"));
  CHECK(balls->nn_query(Point{0.5, 0.6}).distance == 0.0);
  auto box = io::make_oracle(json::parse(R"({"kind":"box-boundary","params":{"low":[0,0],"high":[1,1]}})"));
  CHECK(box->dim() == 2);

  CHECK_THROWS_AS(io::make_oracle(json::parse(R"({"kind":"torus"})")), InputError);
  CHECK_THROWS_AS(io::make_oracle(json::parse(R"({"kind":"sphere","params":{"center":[0.5],"radius":-1}})")), InputError);
  CHECK_THROWS_AS(io::make_oracle(json::parse(R"({"kind":"sphere","dim":3,"params":{"center":[0.5,0.5],"radius":0.1}})")),
                  InputError);
  CHECK_THROWS_AS(io::make_oracle(json::parse(R"({"kind":"finite-set","params":{"points":"x"}})")), InputError);
}

TEST_CASE("report json shapes") {
  const std::vector<Point> pts{{0, 0}, {1, 0}, {0, 1}};
  const std::vector<std::size_t> idx{0, 1};
  DensityClustering c = voronoi_partition(pts, std::span<const std::size_t>(idx));
  const auto j = report::to_json(c);
  CHECK(j["center_count"] == 2);
  CHECK(j["sizes"] == nlohmann::json::array({2, 1}));
  const std::string svg = report::svg_clustering(pts, c);
  CHECK(svg.starts_with("<svg"));
  const std::vector<Point> pts3{{0, 0, 0}};
  const std::vector<std::size_t> idx3{0};
  CHECK_THROWS_AS(report::svg_clustering(pts3, voronoi_partition(pts3, std::span<const std::size_t>(idx3))), UsageError);
}

#ifdef PXPROBE_CLI_PATH
namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(PXPROBE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("cli generate") {
  const fs::path dir = temp_dir();
  const std::string a = (dir / "a.csv").string(), b = (dir / "b.csv").string(), c = (dir / "c.csv").string();
  REQUIRE(run("generate --shape uniform --n 10 --dim 2 --seed 7 --out " + a) == 0);
  REQUIRE(run("generate --shape uniform --n 10 --dim 2 --seed 7 --out " + b) == 0);
  CHECK(io::read_file(a) == io::read_file(b));

  REQUIRE(run("generate --shape circle --n 64 --seed 1 --out " + c) == 0);
  for (const Point& p : io::read_points_csv(c)) CHECK(std::abs(dist(p, Point{0.5, 0.5}) - 0.4) <= 1e-12);

  REQUIRE(run("generate --shape counterexample --n 3 --out " + c) == 0);
  const auto ce = io::read_points_csv(c);
  REQUIRE(ce.size() == 3);
  CHECK(ce[2][2] == std::sqrt(1.0 - 1.0 / 16.0));

  REQUIRE(run("generate --shape clusters --n 50 --dim 3 --seed 2 --out " + c) == 0);
  CHECK(io::read_points_csv(c).size() == 50);
  CHECK(run("generate --shape uniform --n 5 --out " + (dir / "x" / "y.csv").string()) == 4);
  fs::remove_all(dir);
}

TEST_CASE("cli commands and exit codes") {
  const fs::path dir = temp_dir();
  const std::string pts = (dir / "p.csv").string(), sq = (dir / "sq.csv").string(), rep = (dir / "r.json").string();
  io::write_file(sq, "0,0\n1,0\n0,1\n1,1\n");
  REQUIRE(run("generate --shape uniform --n 200 --seed 3 --out " + pts) == 0);

  REQUIRE(run("greedy --points " + pts + " --iters 50 --mode exact --report " + rep) == 0);
  auto j = nlohmann::json::parse(io::read_file(rep));
  CHECK(j["result"]["steps"].size() == 50);
  CHECK(j["result"]["probe_count"] == 50);

  REQUIRE(run("hull --points " + sq + " --query 1.5,0.5 --eps 0.1 --mode exact-extremal --report " + rep) == 0);
  j = nlohmann::json::parse(io::read_file(rep));
  CHECK(j["result"]["verdict"] == "Out");

  REQUIRE(run("density --points " + pts + " --k 16 --seed 3 --report " + rep) == 0);
  j = nlohmann::json::parse(io::read_file(rep));
  CHECK(j["result"]["max_size"].get<int>() <= 16);

  REQUIRE(run("diameter --points " + pts + " --report " + rep) == 0);
  REQUIRE(run("greedy --points " + pts + " --iters 20 --svg " + (dir / "g.svg").string() + " --report " + rep) == 0);
  CHECK(fs::exists(dir / "g.svg"));

  CHECK(run("greedy --points " + pts) == 2);                      // missing --iters
  CHECK(run("hull --points " + sq + " --query 1.5,x") == 2);        // bad query
  CHECK(run("hull --points " + sq + " --query 1.5,0.5 --eps 2") == 2);
  CHECK(run("density --points " + pts + " --k 0") == 2);
  CHECK(run("greedy --points " + (dir / "none.csv").string() + " --iters 3") == 4);
  io::write_file(dir / "bad.csv", "0,0\n1,zz\n");
  CHECK(run("greedy --points " + (dir / "bad.csv").string() + " --iters 3") == 3);
  io::write_file(dir / "p3.csv", "0.1,0.2,0.3\n0.5,0.5,0.5\n");
  CHECK(run("greedy --points " + (dir / "p3.csv").string() + " --iters 3 --svg " + (dir / "x.svg").string()) == 2);
  fs::remove_all(dir);
}
#endif
