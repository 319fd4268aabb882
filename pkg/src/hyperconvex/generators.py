"""Deterministic random instances for suites and fixtures."""

from __future__ import annotations

import numpy as np

from .errors import HyperconvexError
from .sets import ConvexSet, Flat, Polytope, Subspace, dimension, zero_subspace

_KIND_TAG = {"gaussian-polytope": 1, "uniform-subspace": 2, "random-flat": 3}


def _uniform_subspace(n: int, k: int, rng: np.random.Generator) -> Subspace:
    if k == 0:
        return zero_subspace(n)
    g = rng.standard_normal((n, k))
    q, _ = np.linalg.qr(g)
    return Subspace(q.T)


def random_instance(kind: str, n: int, k: int, seed: int) -> ConvexSet:
    """Deterministic draw of a random set.

    gaussian-polytope: hull of k+1 plus a few extra standard-normal points
    (redrawn on a rank-degenerate draw); uniform-subspace: rotation
    invariant k-dimensional subspace; random-flat: uniform subspace with a
    Gaussian offset.
    """
    if kind not in _KIND_TAG:
        raise HyperconvexError(f"unknown generator kind {kind!r}")
    if not (isinstance(n, int) and isinstance(k, int)) or not 0 <= k <= n or n < 1:
        raise HyperconvexError("need integer dims with 0 <= k <= n and n >= 1")
    rng = np.random.default_rng([_KIND_TAG[kind], n, k, seed & 0x7FFFFFFF])
    if kind == "uniform-subspace":
        return _uniform_subspace(n, k, rng)
    if kind == "random-flat":
        v = _uniform_subspace(n, k, rng)
        return Flat(rng.standard_normal(n), v.basis)
    m = k + 1 + int(rng.integers(0, 3))
    for _ in range(64):
        pts = rng.standard_normal((m, n))
        p = Polytope(pts)
        if dimension(p) == min(m - 1, n):
            return p
    raise HyperconvexError("could not draw a non-degenerate polytope")
