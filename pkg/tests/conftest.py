"""Shared helpers: tiny constructors and brute-force distance oracles.

The oracles here are deliberately independent of the library internals;
they trade speed for obviousness so test failures implicate the library.
"""

import itertools

import numpy as np
import pytest

from hyperconvex import Flat, Polytope, Subspace


def seg(a, b) -> Polytope:
    return Polytope(np.array([a, b], dtype=float))


def poly(*points) -> Polytope:
    return Polytope(np.array(points, dtype=float))


def span(*vectors) -> Subspace:
    arr = np.array(vectors, dtype=float)
    arr = arr / np.linalg.norm(arr, axis=1, keepdims=True)
    return Subspace(arr)


def flat(base, *vectors) -> Flat:
    arr = np.array(vectors, dtype=float)
    arr = arr / np.linalg.norm(arr, axis=1, keepdims=True)
    return Flat(np.asarray(base, dtype=float), arr)


def weight_grid(m: int, g: int):
    """All barycentric weight vectors over m vertices with g subdivisions."""
    for cut in itertools.combinations(range(g + m - 1), m - 1):
        prev, parts = -1, []
        for c in cut:
            parts.append(c - prev - 1)
            prev = c
        parts.append(g + m - 2 - prev)
        yield np.array(parts, dtype=float) / g


def grid_distance(points: np.ndarray, x: np.ndarray, g: int = 60):
    """Brute-force d(x, conv points) on the weight grid.

    Returns (grid minimum, covering slack): the true distance lies in
    [grid minimum - slack, grid minimum].
    """
    pts = np.asarray(points, dtype=float)
    m = pts.shape[0]
    best = min(float(np.linalg.norm(w @ pts - x)) for w in weight_grid(m, g))
    diam = max(float(np.linalg.norm(p - pts[0])) for p in pts)
    return best, 2.0 * m * diam / g


@pytest.fixture
def rng():
    return np.random.default_rng(20260815)
