import json
import math
import os
import subprocess
from pathlib import Path

import pytest

import pxprobe

SCHEMAS = Path(os.environ.get("PXPROBE_SCHEMAS", Path(__file__).resolve().parents[2] / "docs" / "schemas"))
CLI = os.environ.get("PXPROBE_CLI", "")

RESULT_SCHEMA = {"greedy": "trace", "diameter": "diameter", "hull": "hull", "density": "clustering"}


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def validate(instance, name):
    jsonschema = pytest.importorskip("jsonschema")
    jsonschema.validate(instance, schema(name))


def test_generate_is_deterministic():
    a = pxprobe.generate_points("uniform", 50, 3, seed=7)
    b = pxprobe.generate_points("uniform", 50, 3, seed=7)
    assert a == b
    assert len(a) == 50 and all(len(p) == 3 for p in a)
    assert all(0.0 <= x <= 1.0 for p in a for x in p)


def test_oracle_queries_and_stats():
    o = pxprobe.oracle([[0.0, 0.0], [1.0, 0.0]])
    point, d = o.nn_query([0.2, 0.0])
    assert point == [0.0, 0.0]
    assert d == pytest.approx(0.2)
    o.ann_query([0.9, 0.0], 0.1)
    assert o.stats() == {"exact": 1, "ann": 1, "total": 2}
    o.reset_stats()
    assert o.stats()["total"] == 0


def test_sphere_config():
    o = pxprobe.oracle({"kind": "sphere", "params": {"center": [0.5, 0.5], "radius": 0.25}})
    assert o.kind == "sphere"
    point, d = o.nn_query([1.0, 0.5])
    assert point == pytest.approx([0.75, 0.5])
    assert d == pytest.approx(0.25)


def test_explore_on_finite_set():
    pts = pxprobe.generate_points("uniform", 40, 2, seed=3)
    trace = pxprobe.explore(pts, 10)
    validate(trace, "trace")
    assert trace["probe_count"] == len(trace["steps"]) == 10
    first = trace["steps"][0]
    assert first["q"] == [0.5, 0.5]
    centers = trace["centers"]
    assert all(c in pts for c in centers)


def test_explore_ann_mode():
    pts = pxprobe.generate_points("clusters", 60, 2, seed=11)
    trace = pxprobe.explore(pts, 8, mode="ann", eps=0.2, adversarial=True)
    validate(trace, "trace")
    for s in trace["steps"]:
        assert s["carve_radius"] == pytest.approx((1 - 0.2) * s["reported"])


def test_diameter_estimate_is_within_factor():
    pts = pxprobe.generate_points("circle", 64, 2, seed=5)
    est = pxprobe.estimate_diameter(pts)
    validate(est, "diameter")
    true = max(math.dist(a, b) for a in pts for b in pts)
    assert true / 3 <= est["estimate"] <= true + 1e-12


def test_hull_membership_square():
    square = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]
    inside = pxprobe.hull_membership(square, [0.5, 0.5], eps=0.1, delta_big=2.0)
    validate(inside, "hull")
    assert inside["verdict"] == "In"
    outside = pxprobe.hull_membership(square, [2.0, 2.0], eps=0.1, delta_big=2.0)
    assert outside["verdict"] == "Out"
    assert pxprobe.exact_hull_distance([2.0, 2.0], square) == pytest.approx(math.sqrt(2))


@pytest.mark.parametrize("mode", ["exact-extremal", "approx-extremal", "ann"])
def test_hull_modes_respect_budget(mode):
    pts = pxprobe.generate_points("uniform", 30, 3, seed=2)
    run = pxprobe.hull_membership(pts, [0.5, 0.5, 0.5], eps=0.2, mode=mode)
    validate(run, "hull")
    assert run["probes"] <= run["budget"]


def test_density_balance():
    pts = pxprobe.generate_points("uniform", 200, 2, seed=9)
    res = pxprobe.k_density_centers(pts, 10, seed=4, initial_sample=20)
    validate(res, "clustering")
    assert res["balanced"]
    assert res["max_size"] <= 10
    assert sum(res["sizes"]) == 200
    part = pxprobe.voronoi_partition(pts, res["center_indices"])
    assert part["sizes"] == res["sizes"]


def test_counterexample_set():
    pts = pxprobe.counterexample_set(4)
    assert len(pts) == 4 and all(len(p) == 4 for p in pts)
    assert pts[0][0] == pytest.approx(math.sqrt(1 - 2**-2))


def test_usage_errors_raise_value_error():
    with pytest.raises(ValueError):
        pxprobe.hull_membership([[0.0, 0.0]], [0.0, 0.0, 0.0], delta_big=1.0)
    with pytest.raises(ValueError):
        pxprobe.oracle({"kind": "sphere", "params": {"center": [0.5], "radius": -1}})


def test_gonzalez_radii_non_increasing():
    pts = pxprobe.generate_points("uniform", 80, 2, seed=1)
    g = pxprobe.gonzalez(pts, 6)
    assert len(g["centers"]) == 6
    assert all(a >= b for a, b in zip(g["radii"], g["radii"][1:]))


@pytest.mark.skipif(not CLI, reason="CLI not built")
@pytest.mark.parametrize(
    "command,extra",
    [
        ("greedy", ["--iters", "5"]),
        ("diameter", []),
        ("hull", ["--query", "0.5,0.5"]),
        ("density", ["--k", "8"]),
    ],
)
def test_cli_reports_match_schemas(tmp_path, command, extra):
    csv = tmp_path / "pts.csv"
    subprocess.run(
        [CLI, "generate", "--shape", "uniform", "--n", "40", "--dim", "2", "--seed", "1", "--out", str(csv)],
        check=True,
        capture_output=True,
    )
    out = subprocess.run([CLI, command, "--points", str(csv), *extra], check=True, capture_output=True, text=True)
    report = json.loads(out.stdout)
    validate(report, "report")
    validate(report["result"], RESULT_SCHEMA[command])
    assert report["command"] == command
