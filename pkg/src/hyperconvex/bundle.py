"""Charts for convex bodies riding on flats near a reference subspace.

A polytope B whose affine hull has direction v in the chart domain of w is
encoded by the triple (v, omega, a): the direction subspace, the offset of
the hull in the complement of w, and the shadow a = proj_w(B - omega), a
polytope living inside w.  Forward and inverse are mutually inverse and
linear in the generators, so they preserve affine dimension exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import ToleranceConfig, resolve
from .errors import ChartDomainError
from .grassmann import in_chart_domain, lift_point, parallel_subspace
from .sets import ConvexSet, Flat, Polytope, Subspace, affine_hull, check_same_ambient


@dataclass(frozen=True)
class ChartTriple:
    direction: Subspace
    offset: np.ndarray
    body: Polytope

    def __post_init__(self):
        offset = np.asarray(self.offset, dtype=float)
        object.__setattr__(self, "offset", offset)
        check_same_ambient(self.direction, offset, self.body)


def base_map(s: ConvexSet) -> Subspace:
    """Direction subspace of the affine hull; a retraction (subspaces map
    to themselves)."""
    if isinstance(s, Subspace):
        return s
    if isinstance(s, Flat):
        return parallel_subspace(s)[0]
    return parallel_subspace(affine_hull(s))[0]


def lift_set(
    w: Subspace, v: Subspace, a: Polytope, tol: ToleranceConfig | None = None
) -> Polytope:
    """Generator-wise lift of a polytope contained in w onto v."""
    cfg = resolve(tol)
    check_same_ambient(w, v, a)
    if not in_chart_domain(w, v, cfg):
        raise ChartDomainError("direction subspace outside the chart domain")
    lifted = np.array([lift_point(w, v, g, cfg) for g in a.points])
    return Polytope(lifted)


def chart_convex(
    w: Subspace, triple: ChartTriple, tol: ToleranceConfig | None = None
) -> Polytope:
    """Polytope encoded by the triple: lift of the body onto the direction
    subspace, translated by the offset."""
    cfg = resolve(tol)
    check_same_ambient(w, triple.direction)
    if np.linalg.norm((w.basis @ triple.offset) @ w.basis) > cfg.tau_geom * max(
        1.0, float(np.linalg.norm(triple.offset))
    ):
        raise ChartDomainError("offset must lie in the orthogonal complement of w")
    lifted = lift_set(w, triple.direction, triple.body, cfg)
    return Polytope(lifted.points + triple.offset)


def chart_convex_inv(
    w: Subspace, b: Polytope, tol: ToleranceConfig | None = None
) -> ChartTriple:
    """Chart coordinates of a polytope: hull direction, hull offset in the
    complement of w, and the shadow of the translated body inside w.

    The hull direction must have the chart dimension; flatter bodies have
    no preimage with a w-dimensional shadow and are rejected.
    """
    cfg = resolve(tol)
    check_same_ambient(w, b)
    hull = affine_hull(b, cfg)
    v, p = parallel_subspace(hull)
    if v.dim != w.dim:
        raise ChartDomainError(
            f"hull direction dimension {v.dim} does not match the chart dimension {w.dim}"
        )
    if not in_chart_domain(w, v, cfg):
        raise ChartDomainError("hull direction outside the chart domain")
    if w.dim == 0:
        offset = p
    else:
        offset = p - lift_point(w, v, (w.basis @ p) @ w.basis, cfg)
        offset = offset - (w.basis @ offset) @ w.basis
    shadow = (b.points - offset) @ (w.basis.T @ w.basis)
    return ChartTriple(v, offset, Polytope(shadow))
