"""Exploring point sets through nearest-neighbour probes."""

import json

try:
    from . import _pxprobe as _core
except ImportError:  # in-tree build: the extension sits next to the package
    import _pxprobe as _core

Oracle = _core.Oracle
InputError = _core.InputError
UsageError = _core.UsageError
IoError = _core.IoError

generate_points = _core.generate_points
counterexample_set = _core.counterexample_set
density_initial_sample = _core.density_initial_sample
gonzalez = _core.gonzalez
exact_hull_distance = _core.exact_hull_distance
hull_iteration_budget = _core.hull_iteration_budget
cone_cover_size = _core.cone_cover_size
cone_count = _core.cone_count

__all__ = [
    "Oracle",
    "InputError",
    "UsageError",
    "IoError",
    "oracle",
    "explore",
    "estimate_diameter",
    "hull_membership",
    "k_density_centers",
    "voronoi_partition",
    "generate_points",
    "counterexample_set",
    "density_initial_sample",
    "gonzalez",
    "exact_hull_distance",
    "hull_iteration_budget",
    "cone_cover_size",
    "cone_count",
]


def _rows(points):
    return [[float(x) for x in p] for p in points]


def oracle(source, adversarial=False, base_dir=""):
    """Build an Oracle from a point list or an oracle config (dict or JSON text)."""
    if isinstance(source, Oracle):
        return source
    if isinstance(source, dict):
        return Oracle.from_config(json.dumps(source), base_dir)
    if isinstance(source, str):
        return Oracle.from_config(source, base_dir)
    return Oracle.from_points(_rows(source), adversarial)


def explore(source, iterations, mode="exact", eps=0.1, rho=0.25, max_depth=20, adversarial=False):
    """Greedy exploration; returns the trace as a dict."""
    return json.loads(
        _core._explore(oracle(source, adversarial), iterations, mode=mode, eps=eps, rho=rho, max_depth=max_depth)
    )


def estimate_diameter(source):
    return json.loads(_core._estimate_diameter(oracle(source)))


def hull_membership(points, query, eps=0.1, mode="exact-extremal", delta_big=None, adversarial=False):
    """Approximate membership of `query` in the convex hull of `points`."""
    return json.loads(
        _core._hull_membership(
            _rows(points), [float(x) for x in query], eps=eps, mode=mode, delta_big=delta_big, adversarial=adversarial
        )
    )


def k_density_centers(points, k, seed=0, planar=None, initial_sample=None):
    return json.loads(
        _core._k_density_centers(_rows(points), k, seed=seed, planar=planar, initial_sample=initial_sample)
    )


def voronoi_partition(points, center_indices):
    return json.loads(_core._voronoi_partition(_rows(points), list(center_indices)))
