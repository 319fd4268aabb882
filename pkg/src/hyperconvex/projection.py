"""Metric projections and distances onto the representable convex sets.

Flats and subspaces project by orthogonal linear algebra.  Polytopes project
via the minimum-norm point of the shifted generator set, computed with a
Wolfe-style active-set scheme whose duality gap doubles as the certificate:
the variational-inequality residual of the returned point is bounded by the
final gap.

Ball-truncated sets (set intersected with a centered closed ball) are needed
by the hyperspace metrics; flats and subspaces admit exact closed forms for
those, polytopes fall back to Dykstra's alternating projections, which
converge to the metric projection onto the intersection.
"""

from __future__ import annotations

import itertools
from typing import Callable

import numpy as np

from .config import ToleranceConfig, resolve
from .errors import (
    ConvergenceError,
    EmptyIntersectionError,
    HyperconvexError,
)
from .sets import ConvexSet, Flat, Polytope, Subspace, check_same_ambient

_EPS = float(np.finfo(float).eps)


# ---------------------------------------------------------------------------
# minimum-norm point (Wolfe active set)


def _affine_minimizer(Q: np.ndarray) -> np.ndarray:
    """Coefficients alpha (sum 1, sign-free) minimizing ||alpha @ Q||."""
    s = Q.shape[0]
    if s == 1:
        return np.ones(1)
    bordered = np.zeros((s + 1, s + 1))
    bordered[0, 1:] = 1.0
    bordered[1:, 0] = 1.0
    bordered[1:, 1:] = Q @ Q.T
    rhs = np.zeros(s + 1)
    rhs[0] = 1.0
    sol, *_ = np.linalg.lstsq(bordered, rhs, rcond=None)
    return sol[1:]


def min_norm_point(points: np.ndarray, gap_tol: float, max_iter: int):
    """Minimum-norm point of conv(rows of points).

    Returns (w, gap) where gap = <w,w> - min_i <p_i, w> is the Wolfe duality
    gap at exit; every generator a then satisfies <-w, a - w> >= -gap, so gap
    bounds the variational-inequality residual of w.
    """
    points = np.asarray(points, dtype=float)
    m = points.shape[0]
    sq = np.einsum("ij,ij->i", points, points)
    scale2 = max(1.0, float(sq.max()))
    # below ~64 eps * scale2 the gap is numerically indistinguishable from 0
    tol = max(gap_tol, 64.0 * _EPS * scale2)

    active = [int(np.argmin(sq))]
    lam = np.ones(1)
    w = points[active[0]].copy()

    for _ in range(max_iter):
        dots = points @ w
        gap = float(w @ w - dots.min())
        if gap <= tol:
            return w, max(gap, 0.0)
        j = int(np.argmin(dots))
        if j in active:
            # no generator improves; stall is at rounding level or a bug
            if gap <= 1e5 * 64.0 * _EPS * scale2:
                return w, max(gap, 0.0)
            raise ConvergenceError(
                "minimum-norm point stalled above tolerance", best=w, residual=gap
            )
        active.append(j)
        lam = np.append(lam, 0.0)
        # minor cycles: shrink back to a corral (all-positive affine minimizer)
        for _ in range(m + 2):
            Q = points[active]
            alpha = _affine_minimizer(Q)
            if np.all(alpha > -1e-13):
                lam = np.clip(alpha, 0.0, None)
                lam /= lam.sum()
                w = lam @ Q
                break
            neg = alpha < -1e-13
            t = lam[neg] / (lam[neg] - alpha[neg])
            theta = min(float(t.min()), 1.0)
            lam = (1.0 - theta) * lam + theta * alpha
            lam = np.clip(lam, 0.0, None)
            drop = lam <= 1e-13
            if not drop.any():
                drop = lam == lam.min()
            keep = ~drop
            if not keep.any():
                keep[int(np.argmax(lam))] = True
            active = [a for a, k in zip(active, keep) if k]
            lam = lam[keep]
            lam /= lam.sum()
        else:
            raise ConvergenceError(
                "minor cycle failed to restore a corral",
                best=w,
                residual=float(w @ w - (points @ w).min()),
            )
    dots = points @ w
    raise ConvergenceError(
        "minimum-norm point iteration cap exceeded",
        best=w,
        residual=float(w @ w - dots.min()),
    )


# ---------------------------------------------------------------------------
# projections


def _project_flat(base: np.ndarray, basis: np.ndarray, x: np.ndarray) -> np.ndarray:
    return base + (basis @ (x - base)) @ basis


def metric_projection(s: ConvexSet, x, tol: ToleranceConfig | None = None):
    """Nearest point of the set to x and the distance.

    Returns (point, dist).  For flats and subspaces the residual is exactly
    orthogonal to the direction span; for polytopes the Wolfe gap at exit
    bounds the variational-inequality residual.
    """
    cfg = resolve(tol)
    x = np.asarray(x, dtype=float)
    check_same_ambient(s, x)
    if isinstance(s, Polytope):
        pts = np.unique(s.points, axis=0)
        cap = max(10 * pts.shape[0] * s.ambient_dim, 50)
        w, _ = min_norm_point(pts - x, gap_tol=cfg.tau_geom**2, max_iter=cap)
        return x + w, float(np.linalg.norm(w))
    if isinstance(s, Flat):
        point = _project_flat(s.base, s.basis, x)
        return point, float(np.linalg.norm(x - point))
    point = (s.basis @ x) @ s.basis
    return point, float(np.linalg.norm(x - point))


def nearest_point(s: ConvexSet, tol: ToleranceConfig | None = None):
    """(p, nu): the point of the set closest to the origin and its norm."""
    p, nu = metric_projection(s, np.zeros(s.ambient_dim), tol)
    return p, nu


def project_hyperplane(a, x) -> np.ndarray:
    """Project x onto the hyperplane through a orthogonal to a."""
    a = np.asarray(a, dtype=float)
    x = np.asarray(x, dtype=float)
    check_same_ambient(a, x)
    nrm2 = float(a @ a)
    if nrm2 == 0.0:
        raise HyperconvexError("zero vector defines no hyperplane")
    return x + a - (float(x @ a) / nrm2) * a


def contains(s: ConvexSet, x, tol: float) -> bool:
    """True iff d(x, set) <= tol."""
    _, dist = metric_projection(s, x)
    return dist <= tol


# ---------------------------------------------------------------------------
# ball-truncated distances


def _clamp_rows(y: np.ndarray, radius: float) -> np.ndarray:
    nrm = np.linalg.norm(y, axis=-1, keepdims=True)
    with np.errstate(invalid="ignore", divide="ignore"):
        scale = np.where(nrm > radius, radius / np.where(nrm > 0, nrm, 1.0), 1.0)
    return y * scale


def flat_min_norm_point(f: Flat) -> np.ndarray:
    """Closed-form nearest point of a flat to the origin."""
    return f.base - (f.basis @ f.base) @ f.basis


def _dykstra_polytope_ball(pts, x, radius, move_tol, max_iter=20000):
    """Projection of x onto conv(pts) ∩ radius-ball via Dykstra."""
    b = x.copy()
    p = np.zeros_like(x)
    q = np.zeros_like(x)
    gap_tol = move_tol**2
    cap = max(10 * pts.shape[0] * pts.shape[1], 50)
    for _ in range(max_iter):
        z = b + p
        w, _ = min_norm_point(pts - z, gap_tol=gap_tol, max_iter=cap)
        a = z + w
        p = z - a
        z = a + q
        b_next = _clamp_rows(z, radius)
        q = z - b_next
        if np.linalg.norm(b_next - b) < move_tol and np.linalg.norm(a - b_next) < move_tol:
            return b_next
        b = b_next
    raise ConvergenceError(
        "alternating projections did not converge", best=b, residual=float(np.linalg.norm(a - b))
    )


def truncated_distance(s: ConvexSet, x, L: float, tol: ToleranceConfig | None = None) -> float:
    """d(x, set ∩ closed ball of radius L around the origin)."""
    cfg = resolve(tol)
    x = np.asarray(x, dtype=float)
    check_same_ambient(s, x)
    if not L > 0:
        raise HyperconvexError("truncation radius must be positive")
    if isinstance(s, Subspace):
        point = _clamp_rows((s.basis @ x) @ s.basis, L)
        return float(np.linalg.norm(x - point))
    if isinstance(s, Flat):
        p = flat_min_norm_point(s)
        nu = float(np.linalg.norm(p))
        if nu > L + cfg.tau_geom:
            raise EmptyIntersectionError(
                f"flat misses the ball: d(0, flat) = {nu:.6g} > {L:.6g}"
            )
        rho = float(np.sqrt(max(L * L - nu * nu, 0.0)))
        v = (s.basis @ (x - p)) @ s.basis
        point = p + _clamp_rows(v, rho)
        return float(np.linalg.norm(x - point))
    # polytope
    pts = np.unique(s.points, axis=0)
    if float(np.linalg.norm(pts, axis=1).max()) <= L:
        # ball does not cut the hull
        _, dist = metric_projection(s, x, cfg)
        return dist
    _, nu = nearest_point(s, cfg)
    if nu > L + cfg.tau_geom:
        raise EmptyIntersectionError(
            f"polytope misses the ball: d(0, hull) = {nu:.6g} > {L:.6g}"
        )
    point = _dykstra_polytope_ball(pts, x, L, move_tol=max(cfg.tau_geom, 1e-12))
    return float(np.linalg.norm(x - point))


# ---------------------------------------------------------------------------
# vectorized distance evaluators (used by the certified sup estimators)


def _polytope_pieces(pts: np.ndarray):
    """Affine pieces (p0, D, M) of every low-dimensional face candidate.

    d(x, hull) equals the minimum over affinely independent generator
    subsets S of ||x - proj_aff(S)(x)|| restricted to projections whose
    barycentric coordinates are all nonnegative: the minimal face containing
    the true projection contributes exactly d(x, hull), every other feasible
    subset yields a point inside the hull and so cannot undercut it.
    """
    m, n = pts.shape
    pieces = []
    for size in range(2, min(m, n + 1) + 1):
        for idx in itertools.combinations(range(m), size):
            p0 = pts[idx[0]]
            D = (pts[list(idx[1:])] - p0).T  # (n, size-1)
            sv = np.linalg.svd(D, compute_uv=False)
            if sv[-1] <= 1e-12 * max(float(sv[0]), 1.0):
                continue
            pieces.append((p0, D, np.linalg.pinv(D)))
    return pieces


def distance_evaluator(s: ConvexSet) -> Callable[[np.ndarray], np.ndarray]:
    """Batch map X (rows) -> d(x_i, set), exact per point.

    The polytope branch enumerates candidate faces, which is independent of
    the Wolfe solver used by metric_projection; property tests compare the
    two routes.
    """
    if isinstance(s, Subspace):
        P = s.basis.T @ s.basis

        def f_sub(X: np.ndarray) -> np.ndarray:
            X = np.atleast_2d(X)
            return np.linalg.norm(X - X @ P, axis=1)

        return f_sub
    if isinstance(s, Flat):
        P = s.basis.T @ s.basis
        base = s.base

        def f_flat(X: np.ndarray) -> np.ndarray:
            Xc = np.atleast_2d(X) - base
            return np.linalg.norm(Xc - Xc @ P, axis=1)

        return f_flat
    pts = np.unique(s.points, axis=0)
    if pts.shape[0] == 1:
        p0 = pts[0]

        def f_point(X: np.ndarray) -> np.ndarray:
            return np.linalg.norm(np.atleast_2d(X) - p0, axis=1)

        return f_point
    if pts.shape[0] > 16:
        cap = max(10 * pts.shape[0] * pts.shape[1], 50)

        def f_loop(X: np.ndarray) -> np.ndarray:
            X = np.atleast_2d(X)
            out = np.empty(X.shape[0])
            for i, row in enumerate(X):
                w, _ = min_norm_point(pts - row, gap_tol=1e-18, max_iter=cap)
                out[i] = np.linalg.norm(w)
            return out

        return f_loop
    pieces = _polytope_pieces(pts)

    def f_poly(X: np.ndarray) -> np.ndarray:
        X = np.atleast_2d(X)
        best = np.linalg.norm(X[:, None, :] - pts[None, :, :], axis=2).min(axis=1)
        for p0, D, M in pieces:
            U = (X - p0) @ M.T
            lam0 = 1.0 - U.sum(axis=1)
            feas = (U >= -1e-12).all(axis=1) & (lam0 >= -1e-12)
            if feas.any():
                d = np.linalg.norm(X - (p0 + U @ D.T), axis=1)
                np.minimum(best, np.where(feas, d, np.inf), out=best)
        return best

    return f_poly


def truncated_distance_evaluator(s: ConvexSet, radius: float) -> Callable[[np.ndarray], np.ndarray]:
    """Batch map X -> d(x_i, set ∩ radius-ball); exact closed forms where
    available, row-wise Dykstra for ball-cut polytopes."""
    if isinstance(s, Subspace):
        P = s.basis.T @ s.basis

        def f_sub(X: np.ndarray) -> np.ndarray:
            X = np.atleast_2d(X)
            return np.linalg.norm(X - _clamp_rows(X @ P, radius), axis=1)

        return f_sub
    if isinstance(s, Flat):
        p = flat_min_norm_point(s)
        nu = float(np.linalg.norm(p))
        if nu > radius:
            raise EmptyIntersectionError("flat misses the ball")
        rho = float(np.sqrt(max(radius * radius - nu * nu, 0.0)))
        P = s.basis.T @ s.basis

        def f_flat(X: np.ndarray) -> np.ndarray:
            X = np.atleast_2d(X)
            V = (X - p) @ P
            return np.linalg.norm(X - (p + _clamp_rows(V, rho)), axis=1)

        return f_flat
    pts = np.unique(s.points, axis=0)
    if float(np.linalg.norm(pts, axis=1).max()) <= radius:
        return distance_evaluator(s)

    def f_cut(X: np.ndarray) -> np.ndarray:
        X = np.atleast_2d(X)
        out = np.empty(X.shape[0])
        for i, row in enumerate(X):
            out[i] = truncated_distance(s, row, radius)
        return out

    return f_cut
