"""Core set representations.

Three closed convex representations in R^n, kept as a tagged union:

* ``Polytope``  -- convex hull of finitely many generator points (V-rep),
* ``Flat``     -- affine subspace, base point plus orthonormal direction rows,
* ``Subspace`` -- linear subspace, orthonormal basis rows (a Flat with base 0).

Instances are frozen and their arrays are made read-only, so values can be
shared freely across threads; every operation returns new objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .config import ToleranceConfig, resolve
from .errors import DimensionMismatchError, HyperconvexError


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float, copy=True)
    if not np.all(np.isfinite(a)):
        raise HyperconvexError("coordinates must be finite")
    a.setflags(write=False)
    return a


def _check_orthonormal_rows(basis: np.ndarray, tau: float) -> None:
    k = basis.shape[0]
    if k == 0:
        return
    gram = basis @ basis.T
    err = float(np.abs(gram - np.eye(k)).max())
    if err > tau:
        raise HyperconvexError(
            f"basis rows are not orthonormal (deviation {err:.3e} > {tau:.1e})"
        )


@dataclass(frozen=True)
class Polytope:
    """Convex hull of the rows of ``points`` (shape (m, n), m >= 1)."""

    points: np.ndarray

    def __post_init__(self) -> None:
        pts = _freeze(self.points)
        if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] < 1:
            raise HyperconvexError("points must be a non-empty (m, n) array")
        object.__setattr__(self, "points", pts)

    @property
    def ambient_dim(self) -> int:
        return self.points.shape[1]


@dataclass(frozen=True)
class Flat:
    """Affine subspace ``base + span(basis rows)``; basis rows orthonormal."""

    base: np.ndarray
    basis: np.ndarray

    def __post_init__(self) -> None:
        base = _freeze(self.base)
        basis = _freeze(self.basis)
        if base.ndim != 1:
            raise HyperconvexError("base must be a vector")
        if basis.ndim != 2 or basis.shape[1] != base.shape[0]:
            raise HyperconvexError("basis must be (k, n) with n matching base")
        if basis.shape[0] > basis.shape[1]:
            raise HyperconvexError("more basis rows than ambient dimensions")
        _check_orthonormal_rows(basis, resolve(None).tau_orth)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "basis", basis)

    @property
    def ambient_dim(self) -> int:
        return self.base.shape[0]

    @property
    def dim(self) -> int:
        return self.basis.shape[0]


@dataclass(frozen=True)
class Subspace:
    """Linear subspace spanned by orthonormal ``basis`` rows (k, n); k may be 0."""

    basis: np.ndarray

    def __post_init__(self) -> None:
        basis = _freeze(self.basis)
        if basis.ndim != 2 or basis.shape[1] < 1:
            raise HyperconvexError("basis must be a (k, n) array with n >= 1")
        if basis.shape[0] > basis.shape[1]:
            raise HyperconvexError("more basis rows than ambient dimensions")
        _check_orthonormal_rows(basis, resolve(None).tau_orth)
        object.__setattr__(self, "basis", basis)

    @property
    def ambient_dim(self) -> int:
        return self.basis.shape[1]

    @property
    def dim(self) -> int:
        return self.basis.shape[0]


ConvexSet = Union[Polytope, Flat, Subspace]


def zero_subspace(n: int) -> Subspace:
    return Subspace(np.zeros((0, n)))


def as_flat(s: Subspace | Flat) -> Flat:
    """View a subspace as the flat through the origin (flats pass through)."""
    if isinstance(s, Flat):
        return s
    return Flat(np.zeros(s.ambient_dim), s.basis)


def ambient_dim(s: ConvexSet) -> int:
    return s.ambient_dim


def check_same_ambient(*sets_or_vectors) -> int:
    dims = []
    for obj in sets_or_vectors:
        if isinstance(obj, np.ndarray):
            dims.append(obj.shape[-1])
        else:
            dims.append(obj.ambient_dim)
    if len(set(dims)) > 1:
        raise DimensionMismatchError(f"ambient dimensions disagree: {dims}")
    return dims[0]


def affine_hull(p: Polytope, tol: ToleranceConfig | None = None) -> Flat:
    """Smallest flat containing the polytope.

    Rank is decided on singular values of the matrix of generator
    differences: values below tau_rank * max(sigma_max, 1) count as zero.
    """
    cfg = resolve(tol)
    pts = p.points
    base = pts[0]
    if pts.shape[0] == 1:
        return Flat(base, np.zeros((0, p.ambient_dim)))
    diffs = pts[1:] - base
    # rows of vh spanning the row space of diffs
    _, s, vh = np.linalg.svd(diffs, full_matrices=False)
    cutoff = cfg.tau_rank * max(float(s[0]) if s.size else 0.0, 1.0)
    r = int(np.sum(s > cutoff))
    return Flat(base, vh[:r])


def dimension(s: ConvexSet, tol: ToleranceConfig | None = None) -> int:
    """Affine dimension of the set."""
    if isinstance(s, Polytope):
        return affine_hull(s, tol).dim
    return s.dim


def translate(s: ConvexSet, v: np.ndarray) -> ConvexSet:
    """Exact translate of a set by the vector v."""
    v = np.asarray(v, dtype=float)
    check_same_ambient(s, v)
    if isinstance(s, Polytope):
        return Polytope(s.points + v)
    if isinstance(s, Flat):
        return Flat(s.base + v, s.basis)
    if not v.any():
        return s
    return Flat(v, s.basis)


def minkowski_sum(a: ConvexSet, b: ConvexSet) -> ConvexSet:
    """Minkowski sum for the supported pairs.

    polytope + polytope gives the hull of pairwise generator sums; adding a
    singleton polytope translates the other operand.  Sums that would leave
    the representable fragment (flat + non-degenerate polytope produce
    slabs) are rejected.
    """
    check_same_ambient(a, b)
    if isinstance(b, Polytope) and b.points.shape[0] == 1:
        return translate(a, b.points[0])
    if isinstance(a, Polytope) and a.points.shape[0] == 1:
        return translate(b, a.points[0])
    if isinstance(a, Polytope) and isinstance(b, Polytope):
        pts = (a.points[:, None, :] + b.points[None, :, :]).reshape(-1, a.ambient_dim)
        return Polytope(pts)
    raise HyperconvexError(
        "minkowski_sum supports polytope+polytope and set+singleton pairs only"
    )


def generators(s: ConvexSet) -> np.ndarray:
    """Generator points for a polytope; raises otherwise."""
    if not isinstance(s, Polytope):
        raise HyperconvexError("only polytopes have generator points")
    return s.points
