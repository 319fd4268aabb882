"""Subspace geometry: gap metric, complements, and flat charts.

A flat F with direction space V close to a reference subspace W splits
uniquely as F = V + omega with omega in the orthogonal complement of W,
provided the restriction of the projection onto W to V is a bijection.
The chart functions move between (V, omega) pairs and flats, and are exact
up to roundoff: the recovered omega is re-projected onto the complement of
W to scrub accumulated error.
"""

from __future__ import annotations

import numpy as np

from .config import ToleranceConfig, resolve
from .errors import ChartDomainError, DimensionMismatchError, HyperconvexError
from .intervals import Interval
from .hypermetrics import sup_distance_gap
from .projection import flat_min_norm_point
from .sets import Flat, Subspace, check_same_ambient

_COND_CAP = 1e12


def orthonormal_basis(vectors, tol: ToleranceConfig | None = None) -> Subspace:
    """Subspace spanned by the given row vectors.

    Rank detection runs on singular values with cutoff tau_rank times the
    largest (floored at 1); a numerically zero span is rejected.
    """
    cfg = resolve(tol)
    A = np.asarray(vectors, dtype=float)
    if A.ndim != 2 or A.shape[0] == 0:
        raise HyperconvexError("expected a nonempty 2d array of row vectors")
    _, s, vh = np.linalg.svd(A, full_matrices=False)
    cutoff = cfg.tau_rank * max(float(s[0]) if s.size else 0.0, 1.0)
    r = int(np.sum(s > cutoff))
    if r == 0:
        raise HyperconvexError("vectors span a numerically zero subspace")
    return Subspace(vh[:r])


def projection_matrix(v: Subspace) -> np.ndarray:
    return v.basis.T @ v.basis


def orthogonal_complement(v: Subspace) -> Subspace:
    n = v.ambient_dim
    if v.dim == 0:
        return Subspace(np.eye(n))
    if v.dim == n:
        return Subspace(np.zeros((0, n)))
    _, _, vh = np.linalg.svd(v.basis, full_matrices=True)
    return Subspace(vh[v.dim:])


def gap(v: Subspace, w: Subspace, tol: ToleranceConfig | None = None) -> float:
    """Gap distance max(||(I-P_V) P_W||, ||(I-P_W) P_V||), in [0, 1].

    Dimensions may differ; unequal dimensions force a gap of 1.
    """
    check_same_ambient(v, w)
    n = v.ambient_dim
    pv = projection_matrix(v)
    pw = projection_matrix(w)
    eye = np.eye(n)
    a = float(np.linalg.norm((eye - pv) @ pw, 2))
    b = float(np.linalg.norm((eye - pw) @ pv, 2))
    return float(np.clip(max(a, b), 0.0, 1.0))


def gap_direct(
    v: Subspace,
    w: Subspace,
    eps: float = 1e-3,
    tol: ToleranceConfig | None = None,
) -> Interval:
    """Certified interval for the gap computed through set geometry: the
    Hausdorff distance between the unit-ball slices of the two subspaces,
    which the distance-gap estimator evaluates without forming the
    projector difference used by gap()."""
    check_same_ambient(v, w)
    return sup_distance_gap(v, w, 1.0, eps, tol)


# ---------------------------------------------------------------------------
# charts


def in_chart_domain(w: Subspace, v: Subspace, tol: ToleranceConfig | None = None) -> bool:
    """True when the orthogonal projection onto w restricts to a bijection
    from v onto w, i.e. the k x k basis Gram matrix has full rank."""
    cfg = resolve(tol)
    check_same_ambient(w, v)
    if w.dim != v.dim:
        raise DimensionMismatchError(
            f"chart domain compares equal dimensions, got {v.dim} and {w.dim}"
        )
    if w.dim == 0:
        return True
    g = w.basis @ v.basis.T
    return bool(np.linalg.svd(g, compute_uv=False)[-1] > cfg.tau_rank)


def lift_point(
    w: Subspace, v: Subspace, x, tol: ToleranceConfig | None = None
) -> np.ndarray:
    """The unique point of v projecting onto x in w.

    Solves the k x k system (B_w B_v^T) c = B_w x and returns c @ B_v.
    """
    cfg = resolve(tol)
    x = np.asarray(x, dtype=float)
    check_same_ambient(w, v, x)
    if not in_chart_domain(w, v, cfg):
        raise ChartDomainError("projection onto the reference subspace is singular on v")
    resid = x - (w.basis @ x) @ w.basis
    if np.linalg.norm(resid) > cfg.tau_geom * max(1.0, float(np.linalg.norm(x))):
        raise ChartDomainError("point to lift is not in the reference subspace")
    if w.dim == 0:
        return np.zeros(w.ambient_dim)
    g = w.basis @ v.basis.T
    if np.linalg.cond(g) > _COND_CAP:
        raise ChartDomainError("chart system is too ill-conditioned to lift reliably")
    c = np.linalg.solve(g, w.basis @ x)
    return c @ v.basis


def parallel_subspace(f: Flat | Subspace):
    """(direction subspace, anchor): the anchor is the nearest point of the
    flat to the origin, so it is orthogonal to the direction span.  Acting
    on a subspace returns the subspace itself with a zero anchor."""
    if isinstance(f, Subspace):
        return f, np.zeros(f.ambient_dim)
    return Subspace(f.basis), flat_min_norm_point(f)


def chart_flat(
    w: Subspace, v: Subspace, omega, tol: ToleranceConfig | None = None
) -> Flat:
    """Flat v + omega for v in the chart domain of w and omega in the
    orthogonal complement of w."""
    cfg = resolve(tol)
    omega = np.asarray(omega, dtype=float)
    check_same_ambient(w, v, omega)
    if not in_chart_domain(w, v, cfg):
        raise ChartDomainError("direction subspace outside the chart domain")
    if np.linalg.norm((w.basis @ omega) @ w.basis) > cfg.tau_geom * max(
        1.0, float(np.linalg.norm(omega))
    ):
        raise ChartDomainError("offset must lie in the orthogonal complement of w")
    return Flat(omega, v.basis)


def chart_flat_inv(w: Subspace, f: Flat, tol: ToleranceConfig | None = None):
    """Chart coordinates (v, omega) of a flat: the direction subspace and
    the unique offset in the complement of w with f = v + omega."""
    cfg = resolve(tol)
    check_same_ambient(w, f)
    v, p = parallel_subspace(f)
    if v.dim != w.dim:
        raise ChartDomainError(
            f"flat direction dimension {v.dim} does not match the chart dimension {w.dim}"
        )
    if not in_chart_domain(w, v, cfg):
        raise ChartDomainError("flat direction outside the chart domain")
    lifted = lift_point(w, v, (w.basis @ p) @ w.basis, cfg)
    omega = p - lifted
    # scrub roundoff: omega is in the complement of w by construction
    omega = omega - (w.basis @ omega) @ w.basis
    return v, omega
